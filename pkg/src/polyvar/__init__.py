"""Variational analysis of discrete (polygonal) planar curves.

Core objects are immutable curves; every operation is a pure function.
"""

from .curves import (
    DiscreteCurve,
    cusp_vertices,
    edge_lengths,
    edge_normal,
    edge_normals,
    edge_vectors,
    enclosed_volume,
    make_curve,
    regular_polygon,
    rot90,
    total_length,
    turning_angle,
    turning_angles,
    turning_number,
)
from .curvature import (
    SCHEMES,
    curvature_vector,
    curvature_vectors,
    dirichlet_energy,
    discrete_gradient,
    discrete_laplacian,
    edge_curvature,
    edge_curvatures,
    edge_line_element,
    edge_line_elements,
    line_element,
    line_elements,
    vertex_curvature,
    vertex_curvatures,
)
from .variation import (
    EquilibriumReport,
    classify_equilibrium,
    conservation_vectors,
    equilibrium_residual,
    first_variation,
    length_gradient,
    length_gradients,
    volume_gradient,
    volume_gradients,
)
from .offsets import (
    OFFSET_VARIANTS,
    SteinerReport,
    frenet_edge_residual,
    frenet_edge_residuals,
    offset_length,
    offset_polygon,
    parallel_curve,
    steiner_report,
    vertex_normal,
    vertex_normals,
    vertex_tangent,
    vertex_tangents,
    weighted_vertex_normal,
    weighted_vertex_normals,
)
from .stability import (
    CertificateResult,
    NormalTangentField,
    SpectrumReport,
    certificate_coefficient,
    decompose_field,
    fourier_decompose,
    fourier_reconstruct,
    harmonic_field,
    instability_certificate,
    jacobi_matrix,
    jacobi_spectrum,
    morse_index,
    ql_form,
    qv_form,
    reconstruct_field,
    regular_polygon_kappa,
    second_variation,
    second_variation_regular,
    wirtinger_gap,
)
from .flow import (
    FlowConfig,
    FlowSnapshot,
    FlowTrajectory,
    flow_step,
    lagrange_kappa,
    project_volume_preserving,
    run_flow,
)
from . import errors

__version__ = "0.1.0"
