"""Economic thermodynamics: Carnot cycles on the ideal income surface, the
economic Van der Waals equation, and its map onto the cusp catastrophe."""

from .carnot import (CarnotSpec, CycleDiagnostics, build_cycle, efficiency, goods_cold,
                     goods_hot, reverse_cycle, validate_cycle, wealth_rectangle)
from .catastrophe import (CuspCoords, cusp_discriminant, cusp_potential,
                          cusp_stationary_points, phi, phi_inverse, surface_residual)
from .errors import DomainError, ModelError, PathError, RoegenError, SolverError
from .ideal import (adiabat_endpoint, adiabat_path, delta_entropy_isothermal, entropy,
                    goods_production_along, growth_potential, isotherm_path, pressure,
                    work_along)
from .state import (CycleReport, ExtendedState, IdealIncomeModel, PathKind, ProcessPath,
                    StatePoint, VdWModel, make_state)
from .vdw import (CoexistenceResult, CriticalPoint, critical_point, maxwell_construction,
                  vdw_isotherm_path, vdw_pressure, verify_critical, volume_roots)

__version__ = "0.1.0"
