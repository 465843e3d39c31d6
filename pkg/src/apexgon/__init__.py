"""Best k-vertex subpolygon approximation of convex polygons.

Two error measures are supported: Hausdorff distance and the aperture
angle complement.  See the README for an overview.
"""
__version__ = "0.1.0"

from .bodies import (ConvexBody, Disk, Ellipse, PolygonBody, RefinementTrace, RegularGon,
                     estimate_alpha_Ck, min_boundary_aperture, sample_boundary, tangent_walk_kgon)
from .chords import (Base, ChordGraph, Diagonal, StructureReport, audit_structure,
                     build_chord_graph, chord_from, find_witnesses, is_feasible)
from .exceptions import (ApexgonError, Degenerate, DegenerateApex, DegenerateInput,
                         DegenerateSegment, DuplicateVertex, HypothesisNotEstablished,
                         InvalidSubset, NotConvex, PreconditionViolated, SizeLimit,
                         TooFewVertices, ZeroError)
from .generators import Generator, cocircular, generate, random_convex, regular_perturbed, unit_perimeter
from .geometry import (ConvexPolygon, angle_at, aperture_angle, between, hausdorff_distance,
                       orientation, perimeter, point_segment_distance, regular_polygon,
                       validate_polygon)
from .io import dumps_polygon, load_polygon, loads_polygon, save_polygon
from .measures import (APERTURE, HAUSDORFF, Circle, DSigmaRegion, ErrorMeasure, d_sigma_contains,
                       phi, psi, stick_out_radius_check)
from .optimize import (ApproxResult, Method, brute_force_opt, candidate_errors, feasible_cover,
                       greedy_wrap, optimal_subpolygon, phi_k)
from .svg import SvgScene
from .worst import (EdgeIdentityReport, PerimeterCheck, ScanConfig, ScanOutcome, WorstApproxVerdict,
                    edge_length_identity_check, is_worst_approximable, perimeter_bound_check,
                    run_scan, scan_family)
