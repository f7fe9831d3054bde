"""Design synthesis and kinetostatic analysis of the Orthoglide 3-axis PKM."""

from .errors import (
    BoundViolationError,
    DegenerateError,
    DegenerateRequirementError,
    DomainError,
    EmptyLocusError,
    JointLimitError,
    NoSolutionError,
    OrthoglideError,
    OutOfReachError,
    SerialSingularError,
    UnsupportedRangeError,
)
from .kinematics import forward_kinematics, inverse_kinematics, jacobians, leg_postures
from .kinetostatics import condition_number, diagonal_transmission, isotropy_residual, transmission
from .model import (
    DesignRequirements,
    JacobianSet,
    JointLimitSolution,
    LegPosture,
    MechanismGeometry,
    TransmissionReport,
    canonical_frame,
)
from .singularity import SingularityClass, classify, parallel_locus_sample, serial_locus_planes
from .synthesis import joint_limits, synthesize, verify_extremality
from .workspace import Verdict, contains, cube_inclusion, field_map

__version__ = "0.1.0"
