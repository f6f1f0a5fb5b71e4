"""Drinfeld modular curves X0^1(n) over F_q(T): genus, cusps, quotient
graphs of the Bruhat–Tits tree, and Weierstrass models in genus one."""

__version__ = "0.1.0"
