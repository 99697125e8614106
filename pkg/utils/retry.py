# utils/retry.py

# Retry a failing estimation attempt with jittered restarts.

from utils.errors import ConvergenceError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def retry_with_restarts(attempt_func, retries=3, label="optimizer"):
    """
    Call attempt_func(attempt) until it stops raising ConvergenceError.
    attempt is 0 for the first try and 1..retries for restarts, so the
    callee decides how to jitter its starting point.
    """
    last_error = None
    for attempt in range(retries + 1):
        try:
            return attempt_func(attempt)
        except ConvergenceError as e:
            last_error = e
            if attempt == retries:
                break
            logger.warning(f"⚠️ {label} attempt {attempt + 1} failed: {e}. Restarting from a jittered start...")
    raise ConvergenceError(f"{label} did not converge after {retries} restarts: {last_error}")
