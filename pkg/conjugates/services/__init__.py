"""Services for the Legendre transform and its checks."""

from .areas import AreaService
from .checks import CheckService
from .modeling import ModelService
from .oracle import OracleService
from .quadrature import QuadratureService
from .transform import TransformService

__all__ = [
    "AreaService",
    "CheckService",
    "ModelService",
    "OracleService",
    "QuadratureService",
    "TransformService",
]
