# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from os.path import abspath, dirname, join

PACKAGE_DIR = dirname(abspath(__file__))
PROJECT_ROOT = dirname(PACKAGE_DIR)
DOCUMENTS_DIR = join(PROJECT_ROOT, "documents")

GRAMMAR_DOC = join(DOCUMENTS_DIR, "grammar.md")
REPORT_SCHEMA_DOC = join(DOCUMENTS_DIR, "report_schema.md")
