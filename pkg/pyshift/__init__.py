# PYSHIFT package
'''
pyshift is a toolkit for the shifting lower bound on clock synchronization in
k-ary m-toroids with odd k.  It builds the base execution and its shift
matrices, checks the resulting certificate exactly, compares it with an exact
linear programming search and replays the bound on concrete algorithms in a
discrete-event simulator.

Required modules:
    NumPy
    SciPy (only for the approximate LP cross-check)

Released under a BSD-style license.
'''

from pyshift.toroid import Toroid, DirectedEdge, Port, ParameterError, make_toroid
from pyshift.delays import DelayAssignment, ShiftMatrix, base_delays, \
                           apply_shift_to_delays, is_admissible, reverse_complement_check
from pyshift.certificate import PairCycle, Certificate, BoundReport, w_entry, shift_matrix, \
                                delta, printed_delta, delta_table_discrepancies, \
                                diagonal_cycle, odd_certificate, paper_certificate, \
                                check_certificate
from pyshift.bounds import closed_form, gap
from pyshift.simplex import LinearProgram, LpSolution, SolverError, solve_lp, solve_lp_approx
from pyshift.lp_search import build_bound_lp, best_certificate, enumerate_cycles
from pyshift.simulator import HardwareClocks, ExecutionRecord, Algorithm, SimulationError, \
                              TieWarning, run, shift_execution, indistinguishable, \
                              adjusted_offset, max_skew
from pyshift.algorithms import ALGORITHMS, reference_sync, silent, spanning_tree
from pyshift.witness import skew_witness
from pyshift.certio import SchemaError

__authors__ = ['pyshift developers']
__version__ = '0.1.0'
