
from .formulas import m_cyclic_formula, m_cyclic_formula_ceil, m_star_upper_bound
from .formulas import min_diameter_bound_abelian, m_star_proposition, min_diameter_cyclic_formula

from .constructions import build_star_construction, star_coordinates, star_farthest
from .constructions import table1_families, alternate_last_row, table2_rows, FamilyRow, GapRow

from .records import ExtremalRecord, CounterexampleReport, FrontierRow, CYCLIC, ABELIAN, SCOPES

from .search import search_extremal, search_m_cyclic, search_m_star, scan_order
from .search import min_diameter_for_order, avg_distance_frontier, frontier_table
from .search import candidate_blocks, unit_canonical, is_unit_canonical

from .counterexample import certify_counterexample
