from .runner import PropertyRunner, PropertyReport, SuiteResult
from .suites import SUITES
