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

from typing import Any, Dict, Optional, Union
import argparse

from yacs.config import CfgNode

from weilcalc.logging.logger import init_logger

from .config import WeilcalcConfig
from .default import _C

logger = init_logger(__name__)


def _cli_values(others: Optional[Union[Dict, argparse.Namespace]]) -> Dict[str, Any]:
    if others is None:
        return {}
    if isinstance(others, argparse.Namespace):
        others = vars(others)
    return {key.lower(): value for key, value in others.items() if value is not None}


def _apply(node: CfgNode, values: Dict[str, Any]):
    # a flag such as --ring lands in every section that declares the key
    for key, value in node.items():
        if isinstance(value, CfgNode):
            _apply(value, values)
        elif key.lower() in values:
            node[key] = values[key.lower()]


def get_weilcalc_config(cfg_filename: Optional[str] = "",
                        others: Optional[Union[Dict, argparse.Namespace]] = None) -> WeilcalcConfig:
    """Defaults, then the yaml file, then every CLI value that is not None; the result is frozen."""
    cfg: WeilcalcConfig = _C.clone()
    if cfg_filename:
        cfg.merge_from_file(cfg_filename)
        logger.debug("merged config file {}".format(cfg_filename))
    _apply(cfg, _cli_values(others))
    cfg.freeze()
    return cfg
