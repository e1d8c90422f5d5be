"""Branching of affine Kac-Moody modules to winding subalgebras, in exact arithmetic."""
from .algebra import (AffineAlgebra, Coroot, Weight, WindingData, affine_type_a, build_affine,
                      pair, preset, winding_construct)
from .branching import (METHODS, BranchRow, BranchTable, FormalSeries, branch,
                        branch_signed_paths, branch_via_paths, branch_via_steinberg,
                        cancel_partner, character_by_kostant, character_by_paths,
                        dominant_candidates, is_weight, peel_oracle, straighten,
                        verify_kac_character, weight_multiplicity, weight_support)
from .errors import *  # noqa: F401,F403
from .kostant import (PartitionFunction, RootWithMult, partition_function, partition_value,
                      positive_roots_up_to_depth)
from .paths import (HProfile, Path, e_op, enumerate_ls_paths, f_op, h_profile, is_dominant_path,
                    reflect_path, straight_path)
from .serialize import emit_table, table_from_json, table_to_csv, table_to_json
from .weyl import (Basis, OrbitPoint, dotted_basis, plain_basis, reflect, signed_orbit_in_box,
                   to_dominant_signed)

__version__ = "0.1.0"
