"""QAOA for modal-strain-energy sensor placement on small structural models.

The pipeline: build a structure (``modal``), encode the sensor-selection
objective as a QUBO and its Pauli-Z form (``qubo``), simulate QAOA exactly
(``statevector``, ``qaoa``), and scan or optimize the two schedule
parameters (``experiments``, ``optimize``).
"""
from .errors import (ContractViolationError, InvalidParameterError, NumericalFailureError,
                     OspError, OutputError, ResourceLimitError)
from .exhaustive import RankedSolution, exhaustive_search
from .experiments import LandscapeCell, run_landscape_scan, run_optimization_experiment
from .modal import (ModalBasis, StructuralModel, build_case, build_shear_building,
                    build_warren_truss, solve_modal)
from .optimize import minimize_derivative_free, multistart_optimize
from .qaoa import (OspProblem, QaoaConfig, Schedule, approximation_ratio, estimate_cost,
                   gate_count, linear_schedule, run_qaoa_circuit)
from .qubo import (IsingCoefficients, QuboProblem, add_cardinality_penalty, build_mse_qubo,
                   evaluate_qubo, ising_diagonal_oracle, qubo_to_ising)
from .statevector import StateVector

__version__ = "0.1.0"
