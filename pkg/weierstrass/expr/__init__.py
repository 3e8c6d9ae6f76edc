# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.expr.nodes import Expression, Constant, NamedConstant, Variable, Unary, Binary, \
    UnaryOp, BinaryOp, contains_variable, substitute, gamma_a_expression, gamma_slice_parameter
from weierstrass.expr.parser import parse
from weierstrass.expr.printer import to_text
from weierstrass.expr.evaluate import eval_point, eval_jet2, eval_interval, eval_jet2_interval, \
    eval_jet3, eval_jet3_interval, eval_array
