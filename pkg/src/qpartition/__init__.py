"""Exact combinatorics and GL_n(F_q) computations for the q-partition algebra setting."""

from .combinatorics import (
    Partition,
    Permutation,
    SetPartition,
    StandardTableau,
    backsteps,
    bell,
    coset_reps,
    descent_set_tableau,
    enumerate_partitions,
    imaj,
    inv,
    maj_tableau,
    sequence_to_permutation,
    shape_of_sequence,
    stirling2,
)
from .bratteli import BratteliDiagram, dot_export, enumerate_vacillating, level_set, multiplicity
from .errors import GuardError
from .glnq import GLMatrix, act_group_element, basis, commutant_dim, rep_matrix
from .qpoly import QPolynomial, d_poly, f_q, falling_q_product, imaj_generating_sum, q_factorial, q_int
from .qset_partitions import QSetPartition, count_qsp_symbolic, enumerate_qsp, star_height, tilde
from .schensted import VacillatingTableau, delete_insert, delete_insert_inverse, jdt_delete, rsk_insert

__version__ = "0.1.0"
