"""
Convention Ledger - Every sign and slot choice the engine depends on

The hash of this text keys persisted operator blocks, so any edit here
invalidates on-disk caches.
"""

import hashlib

CONVENTION_LEDGER = """\
weights: fundamental-weight coordinates; cartan[i][j] = alpha_j^vee(alpha_i)
form: <alpha_i, alpha_j> = d_j cartan[i][j], shortest root squared length 2
K~_i: acts on weight mu by q^(d_i mu^i)
coproduct: D(E_i) = E_i (x) 1 + K~_i (x) E_i; D(F_i) = F_i (x) K~_-i + 1 (x) F_i
opposite: D'(E_i) = E_i (x) 1 + K~_-i (x) E_i; D'(F_i) = F_i (x) K~_i + 1 (x) F_i
antipode: S(E_i) = -K~_-i E_i; S(F_i) = -F_i K~_i
quasi-R: Theta in U^- (x) U^+, Theta_nu lowers factor 1 by nu, D(u) Theta = Theta D'(u)
weight operator: A(v (x) w) = q^<wt v, wt w> v (x) w
braiding: sigma_{V,W} = flip . A . Theta^-1
ribbon standard: theta_lambda = q^(<lambda,lambda> + 2<lambda,rho>)
ribbon st: theta_lambda = (-1)^(2 rho^vee(lambda)) q^(<lambda,lambda> + 2<lambda,rho>)
strands: up carries V_lambda, down carries the dual space V_lambda^*
cup_cw (up, down): coev = sum_a b_a (x) b^a
cap_cw (up, down): qtrace = ev . sigma_{V,V*} . (theta^s (x) 1)
cup_ccw (down, up): qcotrace = (1 (x) theta^s) . sigma_{V,V*} . coev
cap_ccw (down, up): ev(f (x) v) = f(v)
twist_pos: theta_lambda; twist_neg: theta_lambda^-1
cross_pos at i: sigma_{X_i, X_i+1}; cross_neg at i: sigma_{X_i+1, X_i}^-1
writhe sign: (+1 pos, -1 neg) * (+1 same direction, -1 opposite)
homology: Tor class (i, d) -> (-t)^i q^-d; shift [a](b) -> (-t)^a q^b
"""

CONVENTION_LEDGER_HASH = hashlib.sha256(CONVENTION_LEDGER.encode()).hexdigest()
