# Makes the repository root importable for the tests/ directories of each subpackage.
from hypothesis import settings

# BFS-backed properties routinely exceed hypothesis' default deadline
settings.register_profile('abelcay', deadline=None, max_examples=50)
settings.load_profile('abelcay')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive checks over the full published ranges')
