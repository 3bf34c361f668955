"""redloop: exact verification of reductive homogeneous pairs in small Lie
algebras, their conjugacy witnesses, and the loops realized on the
surviving sections."""

__version__ = "0.1.0"
