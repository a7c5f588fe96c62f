"""Exact linear algebra over Q, Z and prime fields.

Rational and integer matrices are numpy arrays of dtype object holding
`fractions.Fraction` or `int`; matrices over F_p are int64 arrays with
entries in [0, p). Products over F_p are formed in int64 while they
cannot overflow and in Python integers beyond that.
"""
