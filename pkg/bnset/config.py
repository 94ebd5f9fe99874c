from __future__ import annotations

import dataclasses
from configparser import ConfigParser
from os import PathLike
from pathlib import Path

from bnset.exceptions import ConfigurationError

BNSET_ROOT = Path.home() / ".bnset"
ROOT_CONFIG_PATH = BNSET_ROOT / "config.ini"
LOCAL_CONFIG_PATH = Path.cwd() / "bnset.ini"


@dataclasses.dataclass
class Config:
    threads: int = 1
    bound: int = 10
    solution_limit: int | None = None

    @classmethod
    def load(
        cls,
        threads: int | None = None,
        bound: int | None = None,
        solution_limit: int | None = None,
        files: list[str | PathLike] | None = None,
    ) -> Config:
        if files is None:
            files = [ROOT_CONFIG_PATH, LOCAL_CONFIG_PATH]

        config = cls()
        config.read_files(files)
        if threads is not None:
            config.threads = threads
        if bound is not None:
            config.bound = bound
        if solution_limit is not None:
            config.solution_limit = solution_limit

        config.validate()
        return config

    def validate(self) -> None:
        if self.threads < 1:
            raise ConfigurationError(f"threads must be positive: {self.threads}")
        if self.bound < 0:
            raise ConfigurationError(f"bound must be non-negative: {self.bound}")
        if self.solution_limit is not None and self.solution_limit < 0:
            raise ConfigurationError(f"solution_limit must be non-negative: {self.solution_limit}")

    def read_files(self, files: list[str | PathLike]) -> None:
        parser = ConfigParser()
        parser.read([str(path) for path in files])
        self._update_from_configparser(parser)

    def _update_from_configparser(self, parser: ConfigParser) -> None:
        if not parser.has_section("search"):
            return
        section = parser["search"]
        try:
            if "threads" in section:
                self.threads = parser.getint("search", "threads")
            if "bound" in section:
                self.bound = parser.getint("search", "bound")
            if "solution_limit" in section:
                self.solution_limit = parser.getint("search", "solution_limit")
        except ValueError as error:
            raise ConfigurationError(f"Invalid [search] section: {error}") from error
