name = "qmet"
__version__ = "0.1.0"
