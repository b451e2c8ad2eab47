"""Exact computation in graph inverse semigroups over finite directed multigraphs."""

from .errors import (BoundError, CompositionError, GisError, GraphFormatError, MembershipError,
                     MixedGraphError, ParseError, UnknownIdError)
from .graph import (ComponentSet, Edge, FinitenessReport, Graph, component_order, finiteness,
                    induced_subgraph, is_acyclic, is_acyclic_at, load_graph, read_graph, scc)
from .paths import (Path, PathSet, concat, cycle_factorize, enumerate_paths, factor_at_component,
                    factor_at_vertex, format_path, parse_path, strip_prefix)
from .gis import (Element, dclass_vertex, enumerate_dclass, enumerate_jclass, format_element, green,
                  inverse, is_idempotent, multiply, parse_element)
from .polycyclic import Polycyclic, PolyElement, poly_from_rose, poly_multiply, poly_reduce, rose_from_poly
from .brandt import Brandt, BrandtElement, Semilattice, brandt_multiply, matrix_unit_multiply
from .structure import (cycles_to_poly, dclass_to_brandt, embed_jclass, local_structure,
                        structural_report)
from .verify import verify_suite

__version__ = "0.1.0"
