from . import assistant

__version__ = '0.1.0'
