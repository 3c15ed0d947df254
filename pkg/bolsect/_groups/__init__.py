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


from bolsect._groups.loopcore import GroupLoop, Hom, LoopInstance, LoopPoint, ProductLoop, ScheererExtension, \
    ScheererExtensionSpec, SuiteReport, SymmetricSpaceLoop, bol_suite, bruck_suite, check_bol, check_bruck, \
    alternative_suite, direct_product, division_suite, inverse_suite, left_divide, loop_mul, right_divide, \
    run_suites, scheerer_extension, section_uniqueness
from bolsect._groups.matrixrep import CARTAN, GroupElement, GroupInvolution, MatrixRep, ad_conjugate, coset_equal, \
    hermitian_form, mat_exp, mat_log_pd, polar_section, rep_verify, sign_normalize
from bolsect._groups.reproducers import REPRODUCERS, ReproductionReport, reproduce_lemma7, reproduce_prop12, \
    reproduce_prop19
from bolsect._groups.stabilizers import Borel, MaximalCompact, Spiral, StabilizerFamily, TriangularTimesRotation, \
    Unitriangular
