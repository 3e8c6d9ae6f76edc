# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import math
import traceback
import unittest
from typing import List


class ParameterisedTestCase(unittest.TestCase):
    def parameterised_test(self, mapping: List[tuple], fn):
        for tup in mapping:
            inputs = tup[:-1]
            expected = tup[-1]
            try:
                actual = fn(*inputs)
            except Exception as e:
                traceback.print_exc()
                actual = e
            test_name = str(inputs)[:100] if len(inputs) > 1 else str(inputs[0])[:100]
            with self.subTest(test_name):
                assert expected == actual, f"\nExpected: {expected}\nActual  : {actual}\nInputs : {inputs}"

    def approx_test(self, mapping: List[tuple], fn, rel: float = 1e-12, abs_tol: float = 0.0):
        """
        As `parameterised_test`, but floats (or flat tuples of floats) are compared
        with `math.isclose`. Expected exception types are matched with isinstance.
        """
        for tup in mapping:
            inputs = tup[:-1]
            expected = tup[-1]
            try:
                actual = fn(*inputs)
            except Exception as e:
                actual = e
            test_name = str(inputs)[:100] if len(inputs) > 1 else str(inputs[0])[:100]
            with self.subTest(test_name):
                if isinstance(expected, type) and issubclass(expected, Exception):
                    assert isinstance(actual, expected), f"\nExpected: {expected}\nActual  : {actual}\nInputs : {inputs}"
                    continue
                if isinstance(actual, Exception):
                    traceback.print_exception(type(actual), actual, actual.__traceback__)
                exp = expected if isinstance(expected, tuple) else (expected,)
                act = tuple(actual) if isinstance(actual, tuple) else (actual,)
                assert len(exp) == len(act) and all(
                    math.isclose(e, a, rel_tol=rel, abs_tol=abs_tol) for e, a in zip(exp, act)), \
                    f"\nExpected: {expected}\nActual  : {actual}\nInputs : {inputs}"
