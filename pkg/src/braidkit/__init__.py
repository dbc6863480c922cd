"""braidkit: braid families, Dehn-surgery twist calculus and horseshoe
dynamics for closed braids with axis.

Subpackages follow the pipeline: ``braids`` (word problem engine),
``families`` (the parametrized braid families), ``surgery`` (surgered
links and twist moves), ``verifier`` (mechanical replay of the
twist/conjugacy chains), ``dynamics`` (kneading theory, transition
matrices and the tight horseshoe map), ``cli`` (command line front end).
"""

from ._kernel import KERNEL
from .braids import (
    BraidError,
    BraidWord,
    CanonicalFactor,
    NormalForm,
    Permutation,
    compose,
    conjugate,
    cycle_components,
    delta_braid,
    erase_strand,
    format_braid,
    full_twist,
    half_twist_range,
    left_normal_form,
    parse_braid,
    permutation_of,
    positive_permutation_braid,
    words_equal,
)

from .families import (
    FamilyBraid,
    beta,
    beta_prime,
    delta_word,
    gamma,
    pi_q,
    zeta_word,
)
from .surgery import (
    Component,
    ExtendedRational,
    SurgeredLink,
    SurgeryError,
    conjugate_link,
    erase_component,
    link_from_json,
    link_to_json,
    linking_number,
    twist_axis,
    twist_fixed,
)
from .verifier import (
    ConjugacyCertificate,
    VerificationReport,
    conjugacy_search,
    hdst_check,
    verify_magic,
    verify_thm42,
    verify_thm53,
)

__all__ = [
    "KERNEL",
    "FamilyBraid",
    "beta",
    "beta_prime",
    "delta_word",
    "gamma",
    "pi_q",
    "zeta_word",
    "Component",
    "ExtendedRational",
    "SurgeredLink",
    "SurgeryError",
    "conjugate_link",
    "erase_component",
    "link_from_json",
    "link_to_json",
    "linking_number",
    "twist_axis",
    "twist_fixed",
    "ConjugacyCertificate",
    "VerificationReport",
    "conjugacy_search",
    "hdst_check",
    "verify_magic",
    "verify_thm42",
    "verify_thm53",
    "BraidError",
    "BraidWord",
    "CanonicalFactor",
    "NormalForm",
    "Permutation",
    "compose",
    "conjugate",
    "cycle_components",
    "delta_braid",
    "erase_strand",
    "format_braid",
    "full_twist",
    "half_twist_range",
    "left_normal_form",
    "parse_braid",
    "permutation_of",
    "positive_permutation_braid",
    "words_equal",
]

__version__ = "0.1.0"
