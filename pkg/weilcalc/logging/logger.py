# Copyright (c) 2024, Alibaba Group;
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

# http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Logging configuration for weilcalc."""

import json
import logging
from functools import lru_cache
from logging import Logger
from logging.config import dictConfig
from os import path
from types import MethodType
from typing import Any, Dict, cast

# pylint: disable=consider-using-from-import
import weilcalc.envs as envs

WEILCALC_CONFIGURE_LOGGING = envs.WEILCALC_CONFIGURE_LOGGING
WEILCALC_LOGGING_CONFIG_PATH = envs.WEILCALC_LOGGING_CONFIG_PATH
WEILCALC_LOGGING_LEVEL = envs.WEILCALC_LOGGING_LEVEL
WEILCALC_LOGGING_PREFIX = envs.WEILCALC_LOGGING_PREFIX
WEILCALC_LOG_STREAM = envs.WEILCALC_LOG_STREAM
WEILCALC_LOG_FILE = envs.WEILCALC_LOG_FILE

_FORMAT = (f"{WEILCALC_LOGGING_PREFIX}%(levelname)s %(asctime)s "
           "%(filename)s:%(lineno)d] %(message)s")


def _default_logging_config() -> Dict[str, Any]:
    # stdout carries the JSON/CSV command output, so the stream handler writes to stderr
    handlers: Dict[str, Dict[str, Any]] = {}
    if WEILCALC_LOG_STREAM:
        handlers["stream"] = {
            "class": "logging.StreamHandler",
            "formatter": "weilcalc",
            "level": WEILCALC_LOGGING_LEVEL,
            "stream": "ext://sys.stderr",
        }
    if WEILCALC_LOG_FILE:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "formatter": "weilcalc",
            "level": WEILCALC_LOGGING_LEVEL,
            "filename": WEILCALC_LOG_FILE,
            "encoding": "utf-8",
        }
    return {
        "formatters": {
            "weilcalc": {
                "class": "weilcalc.logging.NewLineFormatter",
                "format": _FORMAT,
            },
        },
        "handlers": handlers,
        "loggers": {
            "weilcalc": {
                "handlers": list(handlers),
                "level": "DEBUG",
                "propagate": False,
            },
        },
        "version": 1,
        "disable_existing_loggers": False,
    }


@lru_cache
def _log_once(logger: Logger, level: int, msg: str) -> None:
    # stacklevel 3 reports the caller of info_once / warning_once
    logger.log(level, msg, stacklevel=3)


class _WeilcalcLogger(Logger):
    """Type information for the methods init_logger patches onto plain loggers."""

    def info_once(self, msg: str) -> None:
        _log_once(self, logging.INFO, msg)

    def warning_once(self, msg: str) -> None:
        _log_once(self, logging.WARNING, msg)


def _load_custom_config(config_path: str) -> Dict[str, Any]:
    if not path.exists(config_path):
        raise RuntimeError("Could not load logging config. File does not exist: {}".format(config_path))
    with open(config_path, encoding="utf-8") as file:
        custom_config = json.load(file)
    if not isinstance(custom_config, dict):
        raise ValueError("Invalid logging config. Expected Dict, got {}.".format(type(custom_config).__name__))
    return custom_config


def _configure_weilcalc_root_logger() -> None:
    if not WEILCALC_CONFIGURE_LOGGING and WEILCALC_LOGGING_CONFIG_PATH:
        raise RuntimeError(
            "WEILCALC_CONFIGURE_LOGGING evaluated to false, but WEILCALC_LOGGING_CONFIG_PATH was given. "
            "Enable WEILCALC_CONFIGURE_LOGGING or unset WEILCALC_LOGGING_CONFIG_PATH.")
    if WEILCALC_LOGGING_CONFIG_PATH:
        dictConfig(_load_custom_config(WEILCALC_LOGGING_CONFIG_PATH))
    elif WEILCALC_CONFIGURE_LOGGING:
        dictConfig(_default_logging_config())


def init_logger(name: str) -> _WeilcalcLogger:
    """Logger below the configured weilcalc root, with info_once and warning_once."""
    # pylint: disable=redefined-outer-name
    logger = logging.getLogger(name)
    for method_name in ("info_once", "warning_once"):
        setattr(logger, method_name, MethodType(getattr(_WeilcalcLogger, method_name), logger))
    return cast(_WeilcalcLogger, logger)


# The root logger is initialized when the module is imported.
_configure_weilcalc_root_logger()

logger = init_logger(__name__)
