# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Closure checks run in the background."""

from concurrent import futures
from enum import Enum
import logging
import uuid

from .gateerror import NumbergateError, BudgetExceededError
from .properties.closure import check_closure

logger = logging.getLogger(__name__)


class CheckJobError(NumbergateError):
    """Errors raised by misuse of a CheckJob."""


class JobStatus(Enum):
    """Where a closure check stands."""
    QUEUED = 'waiting for a worker'
    RUNNING = 'closure is being checked'
    CANCELLED = 'check was cancelled before it started'
    PASSED = 'closure checked, no check violated'
    VIOLATED = 'closure checked, some check violated'
    BUDGET_EXCEEDED = 'closure or arena went over its budget'
    ERROR = 'check failed with an error'


class CheckJob:
    """`check_closure` over some seeds on a shared thread pool.

    The job's status tells a passed closure from one with violations and
    from one that ran out of budget, without unpacking the report.
    """

    _executor = futures.ThreadPoolExecutor()

    def __init__(self, ruleset, seeds, options=None, job_id=None):
        self._ruleset = ruleset
        self._seeds = list(seeds)
        self._options = options
        self._job_id = job_id or str(uuid.uuid4())
        self._future = None

    def submit(self):
        """Queue the check.

        Raises:
            CheckJobError: if the job was already submitted.
        """
        if self._future is not None:
            raise CheckJobError("Job {} was already submitted.".format(self._job_id))
        logger.debug("Queueing check %s of %d seed(s) on %s.", self._job_id,
                     len(self._seeds), self._ruleset.name())
        self._future = self._executor.submit(
            check_closure, self._ruleset, self._seeds, self._options)
        return self

    def _submitted(self):
        if self._future is None:
            raise CheckJobError("Job {} has not been submitted.".format(self._job_id))
        return self._future

    def result(self, timeout=None):
        """Wait for the report.

        Args:
            timeout (float): seconds to wait, None to wait for good.

        Returns:
            ClosureReport: the report of the check.

        Raises:
            CheckJobError: if the job was not submitted.
            BudgetExceededError: if the closure went over a budget.
            concurrent.futures.TimeoutError: if the timeout ran out.
            concurrent.futures.CancelledError: if the job was cancelled.
        """
        return self._submitted().result(timeout=timeout)

    def error(self, timeout=None):
        """Wait for the job and return its exception, or None."""
        return self._submitted().exception(timeout=timeout)

    def cancel(self):
        """Cancel the job if no worker has picked it up yet."""
        return self._submitted().cancel()

    def status(self):
        """Return the JobStatus without waiting."""
        future = self._submitted()
        if future.cancelled():
            return JobStatus.CANCELLED
        if not future.done():
            return JobStatus.RUNNING if future.running() else JobStatus.QUEUED
        error = future.exception()
        if isinstance(error, BudgetExceededError):
            return JobStatus.BUDGET_EXCEEDED
        if error is not None:
            return JobStatus.ERROR
        return JobStatus.PASSED if future.result().ok() else JobStatus.VIOLATED

    def job_id(self):
        """Return the job id."""
        return self._job_id

    def ruleset(self):
        """Return the ruleset whose positions are checked."""
        return self._ruleset

    def seeds(self):
        """Return the seeds of the closure."""
        return list(self._seeds)
