from .qpoly import QPoly, q_binomial, q_factorial, q_integer, q_pochhammer
from .setpartition import SetPartition, bell_number, set_partitions
from .trees import BinaryTree, decreasing_tree, right_comb
from .words import *  # noqa: F401,F403
