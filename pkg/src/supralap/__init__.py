"""Supra-Laplacian spectra of temporal multilayer networks.

Assembles supra-adjacency/Laplacian matrices for temporal networks, computes
their spectra either densely or through the per-frequency reduction of the
periodic constant-block model, and measures how well the small-eigenvalue
eigenvectors are captured by the per-layer zero modes.
"""

from supralap.approx import (
    ApproxReport,
    ZeroModeBasis,
    detect_lambda_star,
    error_profile,
    project_residual,
    supra_error_profile,
    zero_mode_basis,
)
from supralap.blockdft import (
    LiftedEigenpair,
    MergedSpectrum,
    ReducedBlock,
    dft_blocks,
    eigenvalue_table,
    full_spectrum,
    inverse_dft_blocks,
    lift_eigenvector,
    reduced_matrix,
)
from supralap.eigen import SpectralResult, eig_residual, eigh
from supralap.generators import (
    ErConfig,
    SalesPardoConfig,
    er_layer,
    er_temporal,
    sales_pardo_layer,
    sales_pardo_temporal,
)
from supralap.graph import (
    LayerGraph,
    degree_vector,
    is_connected,
    normalized_laplacian,
    zero_mode,
)
from supralap.supra import (
    ConstantModelBlocks,
    InterLayerWeights,
    SupraMatrix,
    TemporalNetwork,
    assemble_supra_adjacency,
    constant_model_blocks,
    expand_constant_model,
    supra_degree,
    supra_laplacian,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxReport",
    "ConstantModelBlocks",
    "ErConfig",
    "InterLayerWeights",
    "LayerGraph",
    "LiftedEigenpair",
    "MergedSpectrum",
    "ReducedBlock",
    "SalesPardoConfig",
    "SpectralResult",
    "SupraMatrix",
    "TemporalNetwork",
    "ZeroModeBasis",
    "assemble_supra_adjacency",
    "constant_model_blocks",
    "degree_vector",
    "detect_lambda_star",
    "dft_blocks",
    "eig_residual",
    "eigenvalue_table",
    "eigh",
    "er_layer",
    "er_temporal",
    "error_profile",
    "expand_constant_model",
    "full_spectrum",
    "inverse_dft_blocks",
    "is_connected",
    "lift_eigenvector",
    "normalized_laplacian",
    "project_residual",
    "reduced_matrix",
    "sales_pardo_layer",
    "sales_pardo_temporal",
    "supra_degree",
    "supra_error_profile",
    "supra_laplacian",
    "zero_mode",
    "zero_mode_basis",
]
