import os
from contextlib import contextmanager


SEED_ENVIRONMENT_VARIABLE = "COTORSION_LAB_SEED"


def _seed_from_environment():
    try:
        return int(os.environ.get(SEED_ENVIRONMENT_VARIABLE, 0))

    except ValueError:
        return 0


_decomposition_seed = _seed_from_environment()
_idempotent_search_cap = 12
_fitting_attempts = 16
_cross_check_enabled = True


def get_decomposition_seed():
    """Return the seed used for randomised Fitting splitting attempts"""
    return _decomposition_seed


def set_decomposition_seed(seed):
    global _decomposition_seed
    _decomposition_seed = int(seed)


@contextmanager
def decomposition_seed_as(seed):
    previous_seed = get_decomposition_seed()
    try:
        set_decomposition_seed(seed)
        yield

    finally:
        set_decomposition_seed(previous_seed)


def get_idempotent_search_cap():
    """Largest endomorphism algebra dimension searched exhaustively for idempotents"""
    return _idempotent_search_cap


def set_idempotent_search_cap(cap):
    global _idempotent_search_cap
    assert cap >= 0, cap
    _idempotent_search_cap = cap


@contextmanager
def idempotent_search_cap_as(cap):
    previous_cap = get_idempotent_search_cap()
    try:
        set_idempotent_search_cap(cap)
        yield

    finally:
        set_idempotent_search_cap(previous_cap)


def get_fitting_attempts():
    return _fitting_attempts


def set_fitting_attempts(attempts):
    global _fitting_attempts
    assert attempts >= 0, attempts
    _fitting_attempts = attempts


@contextmanager
def fitting_attempts_as(attempts):
    previous_attempts = get_fitting_attempts()
    try:
        set_fitting_attempts(attempts)
        yield

    finally:
        set_fitting_attempts(previous_attempts)


def get_cross_check_enabled():
    """Whether epi/mono queries run both criteria and compare them"""
    return _cross_check_enabled


def set_cross_check_enabled(enabled):
    global _cross_check_enabled
    _cross_check_enabled = enabled


@contextmanager
def cross_check_enabled_as(enabled):
    previous_state = get_cross_check_enabled()
    try:
        set_cross_check_enabled(enabled)
        yield

    finally:
        set_cross_check_enabled(previous_state)
