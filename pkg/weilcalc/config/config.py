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

"""yaml config files of weilcalc commands; a file may extend another one through `_BASE_`."""

import os
from typing import Any, Dict, List, Optional

import yaml
from yacs.config import CfgNode

BASE_KEY = "_BASE_"


def _resolve_base(filename: str, base: str) -> str:
    base = os.path.expanduser(base)
    if os.path.isabs(base):
        return base
    return os.path.join(os.path.dirname(filename), base)


def _overlay(child: Dict[str, Any], parent: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in child.items():
        if isinstance(value, dict) and key in parent:
            assert isinstance(parent[key], dict), "section '{}' overrides a plain value of its base".format(key)
            _overlay(value, parent[key])
        else:
            parent[key] = value
    return parent


class WeilcalcConfig(CfgNode):
    @classmethod
    def load_yaml_with_base(cls, filename: str, _chain: Optional[List[str]] = None) -> Dict[str, Any]:
        chain = [] if _chain is None else _chain
        path = os.path.abspath(filename)
        if path in chain:
            raise ValueError("cyclic {} chain: {}".format(BASE_KEY, " -> ".join(chain + [path])))
        chain.append(path)
        with open(filename, "r", encoding="utf-8") as f:
            try:
                cfg = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ValueError("invalid yaml in {}: {}".format(filename, e)) from e
        if not isinstance(cfg, dict):
            raise ValueError("config file {} must hold a mapping of sections".format(filename))
        base = cfg.pop(BASE_KEY, None)
        if base is None:
            return cfg
        return _overlay(cfg, cls.load_yaml_with_base(_resolve_base(filename, base), chain))

    def merge_from_file(self, cfg_filename: str):
        self.merge_from_other_cfg(type(self)(self.load_yaml_with_base(cfg_filename)))

    def merge_from_list(self, cfg_list: List):
        assert BASE_KEY not in cfg_list[0::2], "the reserved key '{}' can only be used in files".format(BASE_KEY)
        return super().merge_from_list(cfg_list)
