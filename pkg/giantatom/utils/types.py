from typing import Sequence, Tuple, Union

# Third Party
import numpy as np
import numpy.typing as npt

# Dense complex matrix over the truncated atom space.
Operator = npt.NDArray[np.complex128]
RealArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]
FloatLike = Union[float, Sequence[float], RealArray]
LevelPair = Tuple[int, int]
