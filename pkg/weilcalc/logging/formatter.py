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

import logging


class NewLineFormatter(logging.Formatter):
    """Repeats the record prefix on every line of a multi-line message.

    Verify reports and multiplication tables are logged as multi-line blocks,
    each continuation line keeps the level/location prefix so grep works.
    """

    def format(self, record):
        msg = super().format(record)
        if record.message:
            prefix = msg.partition(record.message)[0]
            msg = msg.replace("\n", "\n" + prefix)
        return msg
