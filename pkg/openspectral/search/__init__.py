from .result import SearchResult
from .graph import OrthogonalityGraph, root_triangle_candidates
from .chain import longest_collinear_chain
from .clique import max_clique_search, maximum_clique, greedy_clique
from .profile import Strategy, ChainStrategy, CliqueStrategy, STRATEGIES, load_strategy, growth_profile
