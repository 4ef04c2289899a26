from .atom import AtomSpec, LADDER_MODELS, ladder_coupling, transition_frequency
from .bath import ConstantDOS, DensityOfStates, Environment, OhmicDOS, make_dos, thermal_occupation
from .layout import CouplingLayout, MirrorSpec
