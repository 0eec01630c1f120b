from typing import Callable
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

# evaluator(j, x, kappa) -> i_j(x, kappa), dimensionless
CorrectionEvaluator = Callable[[int, np.ndarray, float], np.ndarray]


class CorrectionSeriesHook(BaseModel):
    """
    Injectable quantum corrections to the leading classical density:

        (1 / (2 pi kappa)) * sum_{j=1}^{max_order} (-hbar^2 / S^2)^j i_j(x, kappa)

    The integrals i_j are supplied by the caller; none ship with the package.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    evaluator: CorrectionEvaluator
    max_order: int = Field(3, ge=1)

    def correction(
        self, x: np.ndarray, kappa: float, action: float, hbar: float
    ) -> np.ndarray:
        ratio = -(hbar**2) / action**2
        total = np.zeros_like(np.asarray(x, dtype=float))
        for j in range(1, self.max_order + 1):
            total = total + ratio**j * np.asarray(self.evaluator(j, x, kappa), dtype=float)
        return total / (2.0 * math.pi * kappa)
