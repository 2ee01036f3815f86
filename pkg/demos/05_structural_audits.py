"""Auditing the structural facts that every valid code satisfies.

Run me with:  python demos/05_structural_audits.py
"""

from circuitcodes import (
    CodeParams,
    audit_delta_inequalities,
    bit_runs,
    check_window_bitrun_property,
    format_sequence,
    in_family,
    normalize_to_bitrun_form,
    symmetric_max,
)

params = CodeParams(8, 4)
code = symmetric_max(params).witnesses[0]
print("unique maximum symmetric (8,4) code:", format_sequence(code))

# segment inequalities: short segments repeat nothing; mid-length
# segments keep odd-count >= k
print("segment inequalities:", "ok" if audit_delta_inequalities(code, params) == () else "FAIL")

# every window of k+3 transitions begins or ends with a (k+2)-run
print("window run property:", "ok" if check_window_bitrun_property(code, params) is None else "FAIL")

# the code must contain a bit run of length k+3 = 7, which puts it in
# the run-constrained family with l = 3
print("longest bit run:", bit_runs(code).longest)
print("member of family l=3:", in_family(code, params, 3))

# rotate + relabel into run-first layout and audit the tail constraints
form = normalize_to_bitrun_form(code, params)
print("\nnormalized word:", format_sequence(form.word))
print("  leading run:", format_sequence(form.head_run))
print("  link:", form.link)
print("  tail:", format_sequence(form.tail))
print("  (tail constraints were checked during normalization)")
