"""The certified ideal decomposition and simplicity obstruction report.

Each connection class contributes an ideal (a core inside the identity
component plus the class's homogeneous components); a deterministic
complement of the support products finishes the decomposition.  Cross-class
products are certified to vanish, and the obstruction pass reports evidence
against simplicity without ever asserting it.

The same report is available from the command line:
    gradedlts decompose <file> --seed 0 --json report.json
Run as: python demos/04_decomposition_report.py
"""

from gradedlts import (
    SupportData,
    build_embedding,
    builtin,
    connection_classes,
    decompose,
    verify_structure_lemmas,
)

for name in ("disjoint_sum", "sl2_Z", "trivial_grading_sl2"):
    system = builtin(name)
    emb = build_embedding(system)
    report = decompose(system, emb, seed=0)
    print(f"== {name} ==")
    print("complement dim:", report.u.dim, " tight:", report.tight,
          " annihilator dim:", report.annihilator_dim)
    for ideal in report.ideals:
        print(f"  ideal for class [{ideal.cls.representative.format()}]: "
              f"core {ideal.core.dim} + vertex {ideal.vertex.dim} = dim {ideal.total.dim}")
    if report.orthogonality:
        print("cross-class products vanish:", report.all_orthogonal)
    print("direct sum:", report.direct_sum)
    if report.obstructions:
        print("simplicity obstructions:")
        for o in report.obstructions[:4]:
            print(f"  - {o.kind}: {o.detail}")
        if len(report.obstructions) > 4:
            print(f"  ... and {len(report.obstructions) - 4} more")
    else:
        print("simplicity obstructions: none found (this is not a proof of simplicity)")
    print()

system = builtin("disjoint_sum")
emb = build_embedding(system)
sup = SupportData.from_system(system, emb)
checks = verify_structure_lemmas(system, emb, connection_classes(sup), sup)
print("structural law suite on disjoint_sum:")
for check in checks:
    print(f"  {check.name}: {check.nonvacuous} nonvacuous instances,",
          "holds" if check.holds else "FAILS")
