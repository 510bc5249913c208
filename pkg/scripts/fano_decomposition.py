from lefmod.cli import load_instance
from lefmod.decomp import decompose
from lefmod.relative import compute_R, deligne_splitting
from lefmod.perverse import build_gr, perverse_filtration
from lefmod.graded import sample_points

fano = load_instance('fano', subalgebra = 'y1,y3,y5,y7')
sub = fano.subalgebra
ell = sub.to_parent(sample_points(sub.cone(), count = 1)[0])
eta = sample_points(fano.cone, count = 1)[0]

report = decompose(fano.module, sub, fano.form)

for dims, k, m in report.multiset():
    print(f'{dims}[-{k}] x {m}')

filtration = perverse_filtration(fano.module, ell)
gr = build_gr(fano.module, fano.form, filtration, subalgebra = sub)
splitting = deligne_splitting(
    fano.module,
    filtration,
    gr,
    eta,
    compute_R(fano.module, filtration),
)
print('splitting ok:', splitting.ok)
