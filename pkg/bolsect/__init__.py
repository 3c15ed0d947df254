# MIT License
#
# Copyright (c) 2020 Christopher Henderson, chris@chenderson.org
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.



from bolsect._algebra import BolTriple, EigenSplit, Element, ExclusionReport, ExclusionWitness, Involution, \
    LieAlgebra, Sl2Class, Subspace, WitnessKind, bol_triple_check, check_exclusion, check_involution, \
    classify_sl2_element, direct_intersection, direct_sum, eigensplit, format_algebra, is_lie_triple_system, \
    killing_form, parse_algebra, parse_element, parse_matrix, parse_subspace, product_involution, read_algebra, \
    sl2_form, span_closure
from bolsect._catalog import CatalogEntry, ClassificationVerdict, Classifier, Status, TableCheck, build_loop, \
    emit_report, golden_mismatches, load_catalog, load_expected, loop_tangent, run_classification, verify_tables
from bolsect._groups import REPRODUCERS, GroupElement, GroupLoop, Hom, LoopInstance, LoopPoint, MatrixRep, \
    ProductLoop, ScheererExtension, ScheererExtensionSpec, Spiral, SuiteReport, SymmetricSpaceLoop, \
    TriangularTimesRotation, Unitriangular, ad_conjugate, check_bol, check_bruck, coset_equal, direct_product, \
    hermitian_form, left_divide, loop_mul, mat_exp, mat_log_pd, polar_section, rep_verify, reproduce_lemma7, \
    reproduce_prop12, reproduce_prop19, right_divide, run_suites, scheerer_extension, section_uniqueness
from bolsect._sampling import SampleStream
from bolsect.config import DEFAULT_TOLERANCES, CliConfig, Tolerances
