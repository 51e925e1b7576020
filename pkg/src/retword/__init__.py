"""Return words, derived sequences and induced substitutions of substitutive sequences."""

from .errors import (ConsistencyError, DecodingError, ErasingMorphismError, HypothesisError,
                     InputError, InvalidSubstitution, ResourceError, RetwordError,
                     SpecFileError, WindowTooSmall)
from .words import (Alphabet, max_power_index, occurrences, primitive_root, probe_period)
from .substitution import (GrowthStats, Morphism, Substitution, ValidationReport,
                           growth_stats, incidence_matrix, is_primitive, power,
                           repair_first_letter, validate)
from .sequences import (ExplicitOracle, FixedPointOracle, ImageOracle, PeriodicOracle,
                        SequenceOracle, image_oracle, recurrence_gap)
from .returns import (DerivedPrefix, ReturnWordIndex, decode, derived_prefix, encode,
                      extract)
from .induced import (DerivedSetReport, InducedSubstitution, ProjectionMap, block_decompose,
                      derived_set_fixed_point, derived_set_image, induced_substitution,
                      lambda_map, substitution_from_repeat)
from .normalizer import LetterToLetterPresentation, letter_to_letter
from .analysis import (BoundsReport, Complexity, Verdict, bounds_report, detect_periodicity,
                       factor_complexity)

__version__ = "0.1.0"
