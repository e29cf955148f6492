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

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from weilcalc.constants import NILPOTENCY_SPAN_LIMIT
from weilcalc.errors import AlgebraMismatch
from weilcalc.logging.logger import init_logger
from weilcalc.scalars.descriptor import RingDescriptor
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.weil.algebra import ProductRow, WeilAlgebra, WeilElement

logger = init_logger(__name__)

Structure = Mapping[Tuple[int, int], Sequence[Any]]


class TableAlgebra(WeilAlgebra):
    """A Weil algebra given by structure constants c[i][j] -> coefficient vector.

    Products that are not listed are zero. Unless complete_unit is False, products with
    the unit basis element are filled in as e_u * e_j = e_j when missing.
    """

    def __init__(self, base: CommutativeRing, dim: int, structure: Structure, unit_index: int = 0,
                 augmentation: Optional[Sequence[Any]] = None, grading: Optional[Sequence[int]] = None,
                 label: Optional[str] = None, labels: Optional[Sequence[str]] = None,
                 complete_unit: bool = True):
        if dim < 1 or not 0 <= unit_index < dim:
            raise AlgebraMismatch("invalid table shape: dim={}, unit={}".format(dim, unit_index))
        if augmentation is None:
            augmentation = [1 if i == unit_index else 0 for i in range(dim)]
        if len(augmentation) != dim or (grading is not None and len(grading) != dim):
            raise AlgebraMismatch("augmentation and grading need {} entries".format(dim))

        table: Dict[Tuple[int, int], Tuple[Any, ...]] = {}
        for (i, j), vector in structure.items():
            if len(vector) != dim:
                raise AlgebraMismatch("product e{}*e{} has {} coefficients, expected {}".format(
                    i, j, len(vector), dim))
            table[(i, j)] = tuple(base.coerce(c) for c in vector)
        if complete_unit:
            for j in range(dim):
                unit_vector = tuple(base.one() if k == j else base.zero() for k in range(dim))
                table.setdefault((unit_index, j), unit_vector)
                table.setdefault((j, unit_index), unit_vector)
        self.table = table

        rows: List[ProductRow] = [[] for _ in range(dim)]
        for (i, j), vector in sorted(table.items()):
            for k, c in enumerate(vector):
                if c != 0:
                    rows[i].append((j, k, None if c == 1 else c))
        super().__init__(base, dim, unit_index, [base.coerce(p) for p in augmentation], grading, rows)
        self._label = label if label is not None else "table({})".format(dim)
        self._labels = list(labels) if labels is not None else [
            "1" if i == unit_index else "e{}".format(i) for i in range(dim)]
        self._nilpotency = nilpotency_by_powering(self)
        if self._nilpotency is None:
            logger.debug("table {} has no nilpotent augmentation ideal".format(self._label))

    def _key(self):
        return (self.base, self.dim, self.unit_index, self.augmentation, self.grading,
                tuple(sorted(self.table.items())))

    @property
    def nilpotency_order(self) -> int:
        # a non-nilpotent table still gets a finite bound; validate() reports the failure
        return self._nilpotency if self._nilpotency is not None else self.dim + 1

    @property
    def is_nilpotent(self) -> bool:
        return self._nilpotency is not None

    @property
    def label(self) -> str:
        return self._label

    def basis_labels(self) -> List[str]:
        return list(self._labels)

    def over(self, ring: CommutativeRing) -> "TableAlgebra":
        structure = {key: [ring.coerce(c) for c in vector] for key, vector in self.table.items()}
        return TableAlgebra(ring, self.dim, structure, self.unit_index,
                            [ring.coerce(p) for p in self.augmentation], self.grading,
                            label=self._label, labels=self._labels, complete_unit=False)

    def to_json(self) -> Dict[str, Any]:
        fmt = getattr(self.base, "format_scalar", str)
        return {
            "preset": self.label,
            "dim": self.dim,
            "unit": self.unit_index,
            "augmentation": [fmt(p) for p in self.augmentation],
            "grading": None if self.grading is None else list(self.grading),
            "structure": [{"i": i, "j": j, "coeffs": [fmt(c) for c in vector]}
                          for (i, j), vector in sorted(self.table.items())],
            "nilpotency": self._nilpotency,
        }

    @classmethod
    def from_json(cls, ring: RingDescriptor, data: Dict[str, Any]) -> "TableAlgebra":
        structure = {(entry["i"], entry["j"]): [ring.parse_scalar(c) for c in entry["coeffs"]]
                     for entry in data["structure"]}
        return cls(ring, data["dim"], structure, data.get("unit", 0),
                   [ring.parse_scalar(p) for p in data["augmentation"]], data.get("grading"),
                   label=data.get("preset"), complete_unit=False)


def augmentation_ideal_basis(algebra: WeilAlgebra) -> List[WeilElement]:
    """e_i - pi(e_i) * 1 for every non-unit basis index: a spanning set of ker pi."""
    basis = []
    for i in range(algebra.dim):
        if i == algebra.unit_index:
            continue
        e = algebra.basis_element(i)
        basis.append(e - algebra.embed(algebra.project(e)))
    return basis


def nilpotency_by_powering(algebra: WeilAlgebra) -> Optional[int]:
    """Smallest q with N^q = 0, found by multiplying out spanning sets; None if none up to dim + 1."""
    generators = [n for n in augmentation_ideal_basis(algebra) if n]
    if not generators:
        return 1
    current = {n.coeffs: n for n in generators}
    for q in range(2, algebra.dim + 2):
        following: Dict[Tuple[Any, ...], WeilElement] = {}
        for n in generators:
            for w in current.values():
                product = algebra.mul(n, w)
                if product:
                    following[product.coeffs] = product
            if len(following) > NILPOTENCY_SPAN_LIMIT:
                logger.debug("spanning set of N^{} exceeds {} elements".format(q, NILPOTENCY_SPAN_LIMIT))
                return None
        if not following:
            return q
        current = following
    return None
