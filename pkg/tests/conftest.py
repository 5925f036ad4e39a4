import os


def pytest_sessionstart(session):
    os.environ.pop("MINORCAST_SEED", None)
