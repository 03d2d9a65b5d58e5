from contextlib import contextmanager

from fincat.errors import ResourceLimit


class Config(object):
    __max_steps = 2_000_000
    __max_simplices = 200_000
    __max_cosets = 10_000
    __max_dim = 2
    __max_objects = 2_000
    __tietze_steps = 10_000
    __max_group_order = 720

    @staticmethod
    def _positive(value, minimum=1):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"budget must be an int, got {value!r}")
        if value < minimum:
            raise ValueError(f"budget must be >= {minimum}, got {value}")
        return value

    @property
    def max_steps(self):
        return self.__max_steps

    @max_steps.setter
    def max_steps(self, value):
        self.__max_steps = self._positive(value)

    @property
    def max_simplices(self):
        return self.__max_simplices

    @max_simplices.setter
    def max_simplices(self, value):
        self.__max_simplices = self._positive(value)

    @property
    def max_cosets(self):
        return self.__max_cosets

    @max_cosets.setter
    def max_cosets(self, value):
        self.__max_cosets = self._positive(value)

    @property
    def max_dim(self):
        return self.__max_dim

    @max_dim.setter
    def max_dim(self, value):
        self.__max_dim = self._positive(value, minimum=0)

    @property
    def max_objects(self):
        return self.__max_objects

    @max_objects.setter
    def max_objects(self, value):
        self.__max_objects = self._positive(value)

    @property
    def tietze_steps(self):
        return self.__tietze_steps

    @tietze_steps.setter
    def tietze_steps(self, value):
        self.__tietze_steps = self._positive(value, minimum=0)

    @property
    def max_group_order(self):
        return self.__max_group_order

    @max_group_order.setter
    def max_group_order(self, value):
        self.__max_group_order = self._positive(value)

    def as_dict(self):
        return {
            "max_steps": self.max_steps,
            "max_simplices": self.max_simplices,
            "max_cosets": self.max_cosets,
            "max_dim": self.max_dim,
            "max_objects": self.max_objects,
            "tietze_steps": self.tietze_steps,
            "max_group_order": self.max_group_order,
        }

    @contextmanager
    def override(self, **budgets):
        """Temporarily replace budgets, restoring them on exit.

        Parameters
        ----------
        **budgets
            budget name to value, e.g. ``max_cosets=100``
        """
        previous = self.as_dict()
        unknown = set(budgets) - set(previous)
        if unknown:
            raise ValueError(f"unknown budgets {sorted(unknown)}")
        try:
            for key, value in budgets.items():
                setattr(self, key, value)
            yield self
        finally:
            for key, value in previous.items():
                setattr(self, key, value)


config = Config()


class StepBudget(object):
    """Cooperative step counter shared by one exhaustive search."""

    def __init__(self, limit: int = None, name: str = "max_steps"):
        self.limit = config.max_steps if limit is None else limit
        self.name = name
        self.used = 0

    def tick(self, steps: int = 1):
        self.used += steps
        if self.used > self.limit:
            raise ResourceLimit(self.name, self.limit)

    @property
    def remaining(self):
        return max(self.limit - self.used, 0)
