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

import json
import logging
from json.decoder import JSONDecodeError
from typing import Any
from unittest.mock import patch
from uuid import uuid4

import pytest

from weilcalc.logging import NewLineFormatter
from weilcalc.logging.logger import _FORMAT, _configure_weilcalc_root_logger, init_logger

LOGGER_MODULE = "weilcalc.logging.logger"


def write_config(tmp_path, content):
    config_path = tmp_path / "logging.json"
    config_path.write_text(content, encoding="utf-8")
    return str(config_path)


def test_default_weilcalc_root_logger_configuration():
    """Presumes WEILCALC_CONFIGURE_LOGGING and WEILCALC_LOG_STREAM keep their defaults."""
    logger = logging.getLogger("weilcalc")
    assert logger.level == logging.DEBUG
    assert not logger.propagate

    stream_handlers = [h for h in logger.handlers if type(h) is logging.StreamHandler]  # noqa: E721
    assert len(stream_handlers) == 1
    formatter = stream_handlers[0].formatter
    assert isinstance(formatter, NewLineFormatter)
    assert formatter._fmt == _FORMAT


def test_descendent_loggers_propagate_to_root_logger():
    root_handler = logging.getLogger("weilcalc").handlers[0]

    unique_name = "weilcalc.{}".format(uuid4())
    logger = init_logger(unique_name)
    assert logger.name == unique_name
    assert logger.level == logging.NOTSET
    assert not logger.handlers
    assert logger.propagate

    with patch.object(root_handler, "emit") as emit_mock:
        logger.info("pushforward done")
    emit_mock.assert_called_once()
    record = emit_mock.call_args[0][0]
    assert record.name == unique_name
    assert record.msg == "pushforward done"
    assert record.levelno == logging.INFO


def test_once_methods_drop_repeats():
    root_handler = logging.getLogger("weilcalc").handlers[0]
    logger = init_logger("weilcalc.{}".format(uuid4()))
    with patch.object(root_handler, "emit") as emit_mock:
        for _ in range(3):
            logger.warning_once("ring mod:2 has no unit 2")
        logger.info_once("first")
        logger.info_once("first")
    assert emit_mock.call_count == 2


def test_new_line_formatter_repeats_prefix():
    formatter = NewLineFormatter(_FORMAT)
    record = logging.LogRecord("weilcalc", logging.INFO, "cli.py", 7, "a\nb", None, None)
    first, second = formatter.format(record).split("\n")
    assert first.endswith("] a")
    assert second.endswith("] b")
    assert first[:-1] == second[:-1]


@patch(LOGGER_MODULE + ".WEILCALC_CONFIGURE_LOGGING", 0)
@patch(LOGGER_MODULE + ".WEILCALC_LOGGING_CONFIG_PATH", None)
def test_logger_configuring_can_be_disabled():
    with patch(LOGGER_MODULE + ".dictConfig") as dict_config_mock:
        _configure_weilcalc_root_logger()
    dict_config_mock.assert_not_called()


@patch(LOGGER_MODULE + ".WEILCALC_CONFIGURE_LOGGING", 1)
@patch(LOGGER_MODULE + ".WEILCALC_LOGGING_CONFIG_PATH", "/no/such/weilcalc/logging.json")
def test_missing_custom_config_file():
    with pytest.raises(RuntimeError, match="File does not exist"):
        _configure_weilcalc_root_logger()


@patch(LOGGER_MODULE + ".WEILCALC_CONFIGURE_LOGGING", 1)
def test_custom_config_must_be_json(tmp_path):
    config_path = write_config(tmp_path, "---\nloggers: []\nversion: 1")
    with patch(LOGGER_MODULE + ".WEILCALC_LOGGING_CONFIG_PATH", config_path):
        with pytest.raises(JSONDecodeError, match="Expecting value"):
            _configure_weilcalc_root_logger()


@patch(LOGGER_MODULE + ".WEILCALC_CONFIGURE_LOGGING", 1)
@pytest.mark.parametrize("unexpected_config", ("Invalid string", [{"version": 1, "loggers": []}], 0))
def test_custom_config_must_be_a_dict(tmp_path, unexpected_config: Any):
    config_path = write_config(tmp_path, json.dumps(unexpected_config))
    with patch(LOGGER_MODULE + ".WEILCALC_LOGGING_CONFIG_PATH", config_path):
        with pytest.raises(ValueError, match="Invalid logging config. Expected Dict, got"):
            _configure_weilcalc_root_logger()


@patch(LOGGER_MODULE + ".WEILCALC_CONFIGURE_LOGGING", 1)
def test_custom_config_is_used(tmp_path):
    valid_config = {
        "loggers": {"weilcalc.verify.runner": {"handlers": [], "propagate": False}},
        "version": 1,
    }
    config_path = write_config(tmp_path, json.dumps(valid_config))
    with patch(LOGGER_MODULE + ".WEILCALC_LOGGING_CONFIG_PATH", config_path), \
            patch(LOGGER_MODULE + ".dictConfig") as dict_config_mock:
        _configure_weilcalc_root_logger()
    dict_config_mock.assert_called_with(valid_config)


@patch(LOGGER_MODULE + ".WEILCALC_CONFIGURE_LOGGING", 0)
def test_custom_config_requires_configure_logging(tmp_path):
    config_path = write_config(tmp_path, json.dumps({"version": 1}))
    with patch(LOGGER_MODULE + ".WEILCALC_LOGGING_CONFIG_PATH", config_path):
        with pytest.raises(RuntimeError, match="WEILCALC_CONFIGURE_LOGGING evaluated to false"):
            _configure_weilcalc_root_logger()
