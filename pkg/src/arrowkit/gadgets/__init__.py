from .spec import OUTSIDE, GadgetError, GadgetSpec, Mixed, Rule, apply_gadget, dumps, from_json, loads, to_json
from .cases import CaseReport, ConsequenceClass, analyze_gadget_cases
from .builtin import BUILTIN_NAMES, benign_flips, builtin_gadget, certify, conclusions_for
from .search import SEARCH_NAMES, GadgetNotFound, lemma1_gadget_search, search_gadget
from .scenario import scenario_arithmetic
