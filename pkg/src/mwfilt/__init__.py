"""mwfilt: microwave filter synthesis and S-parameter analysis."""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    EmptyNetwork,
    InfeasibleDesign,
    InvalidSpec,
    MwfiltError,
    NonPhysical,
    SingularConversion,
    SingularFrequency,
)
from .spec import DesignSpec, selectivity  # noqa: F401
from .synthesis import (  # noqa: F401
    Branch,
    LadderNetwork,
    PrototypeGValues,
    RippleChain,
    filter_order,
    prototype_g_values,
    ripple_chain,
    scale_lowpass_ladder,
    transform_ladder,
)
from .coupled import CoupledBpfNetwork, synthesize_coupled_bpf  # noqa: F401
from .combline import ComblineNetwork, synthesize_combline  # noqa: F401
from .uwb import UwbCoefficients, uwb_design  # noqa: F401
from .network import (  # noqa: F401
    AbcdMatrix,
    FrequencyResponse,
    SweepGrid,
    abcd_to_s,
    branch_abcd,
    cascade_abcd,
    kernel_backend,
    sweep_network,
)
from .emulation import (  # noqa: F401
    FrequencyMapping,
    closed_form_power,
    map_frequency,
    sweep_closed_form,
    uwb_response,
)
from .result import DesignResult, default_grid, design, response_csv, result_json  # noqa: F401
