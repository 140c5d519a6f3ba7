"""Complementary cones, non-degeneracy of q and the local degree of f_A."""

from .cones import cone_coordinates, cone_matrix, cone_membership, degeneracy_witness, is_q_nondegenerate
from .local_degree import DegreeResult, PPTDegreeReport, local_degree, ppt_image, verify_ppt_degree_relation

__all__ = [
    'cone_coordinates',
    'cone_matrix',
    'cone_membership',
    'degeneracy_witness',
    'is_q_nondegenerate',
    'DegreeResult',
    'PPTDegreeReport',
    'local_degree',
    'ppt_image',
    'verify_ppt_degree_relation',
]
