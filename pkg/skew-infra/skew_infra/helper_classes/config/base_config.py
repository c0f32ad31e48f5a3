from abc import ABC, abstractmethod
from typing import Any

from dataclasses import dataclass, fields, replace


@dataclass
class _BaseConfig(ABC):
    def __post_init__(self):
        """
        Set every unset field to its default value
        Assuming the key exists on the target (where get_default gets its values from)
        """
        for k, v in self.get_all().items():
            if v is None:
                setattr(self, k, self.get_default(k))

    @staticmethod
    @abstractmethod
    def get_default(key, default=None) -> Any:
        pass

    def get_copy(self, **overrides):
        return replace(self, **overrides)

    def get_all(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}
