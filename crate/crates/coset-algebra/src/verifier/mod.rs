//! The proposition verifier: every defining identity of the transfer
//! operators and the convolution/involution structure, encoded as a named
//! check, run over (group, subgroup) pairs with basis-first then randomized
//! inputs, reporting a re-runnable witness on failure.

// mod checks;
// mod generate;
// mod identity;
// mod report;

// wired below once implemented




use std::fmt;

/// Stable identifiers, one per proposition block covered by the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    W0,
    W1,
    T1,
    T2,
    T3,
    T4,
    T5,
    J1,
    F1,
    F2,
    F3,
    F4,
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
    M8,
    N1,
    G1,
    R1,
}

impl CheckId {
    /// All checks, in report order.
    pub const ALL: [CheckId; 23] = [
        CheckId::W0,
        CheckId::W1,
        CheckId::R1,
        CheckId::G1,
        CheckId::T1,
        CheckId::T2,
        CheckId::T3,
        CheckId::T4,
        CheckId::T5,
        CheckId::J1,
        CheckId::F1,
        CheckId::F2,
        CheckId::F3,
        CheckId::F4,
        CheckId::M1,
        CheckId::M2,
        CheckId::M3,
        CheckId::M4,
        CheckId::M5,
        CheckId::M6,
        CheckId::M7,
        CheckId::M8,
        CheckId::N1,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::W0 => "W0",
            CheckId::W1 => "W1",
            CheckId::T1 => "T1",
            CheckId::T2 => "T2",
            CheckId::T3 => "T3",
            CheckId::T4 => "T4",
            CheckId::T5 => "T5",
            CheckId::J1 => "J1",
            CheckId::F1 => "F1",
            CheckId::F2 => "F2",
            CheckId::F3 => "F3",
            CheckId::F4 => "F4",
            CheckId::M1 => "M1",
            CheckId::M2 => "M2",
            CheckId::M3 => "M3",
            CheckId::M4 => "M4",
            CheckId::M5 => "M5",
            CheckId::M6 => "M6",
            CheckId::M7 => "M7",
            CheckId::M8 => "M8",
            CheckId::N1 => "N1",
            CheckId::G1 => "G1",
            CheckId::R1 => "R1",
        }
    }

    pub fn parse(s: &str) -> Result<CheckId, crate::error::Error> {
        Self::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| crate::error::Error::UnknownCheck { id: s.to_string() })
    }

    /// What the check verifies, phrased as the mathematical statement.
    pub fn statement(&self) -> &'static str {
        match self {
            CheckId::W0 => "representative independence: results of T_H, J, and the coset convolutions/involutions do not change when coset representatives are re-chosen",
            CheckId::W1 => "Weil's formula for the weight triple, with the function transfer facts: T_H(psi_q) = psi, sup and L1 norm decrease of T_H, sup isometry of the lift",
            CheckId::T1 => "defining pairing of the measure transfer: T_H(nu)(psi) = nu(psi_q) for all psi",
            CheckId::T2 => "the lift lambda_q: T_H(lambda_q) = lambda, right-H-invariance, adjoint pairing lambda_q(f) = lambda(T_H f), and norm equality |lambda_q| = |lambda|",
            CheckId::T3 => "norm decrease |T_H(nu)| <= |nu|, with a strict-decrease witness from cancellation inside a fiber",
            CheckId::T4 => "equivariance: T_H(nu_x) = T_H(nu)_x and (lambda_x)_q = (lambda_q)_x",
            CheckId::T5 => "the embedding phi -> mu_phi is isometric and intertwines the lifts: (mu_phi)_q = sigma_(phi_q)",
            CheckId::J1 => "the left average J: sup and L1 norm decreasing, idempotent, range is the left-invariant functions, and J = id exactly when H is normal",
            CheckId::F1 => "coset function convolution via the transfer: phi * psi = T_H(phi_q *_G psi_q), its lift form, and left equivariance",
            CheckId::F2 => "L1 submultiplicativity and associativity of the coset function convolution; the invariant functions form a subalgebra",
            CheckId::F3 => "coset function involution: phi** = J(phi), phi* = T_H((phi_q)*), L1 non-increase, with equality and lift compatibility on invariant functions",
            CheckId::F4 => "anti-homomorphism of the function involution over the coset convolution; invariant functions closed under involution",
            CheckId::M1 => "defining pairing of the measure convolution on G/H, associativity, units, the lift homomorphism (lambda * lambda')_q = lambda_q *_G lambda'_q, left equivariance, and the transfer compatibility identities",
            CheckId::M2 => "tv-norm submultiplicativity of the measure convolution on G/H",
            CheckId::M3 => "embedding compatibility: mu_phi * mu_phi' = mu_(phi * phi') and (mu_phi)* = mu_(phi*)",
            CheckId::M4 => "pairing form of the measure involution: lambda*(psi) = conj(lambda(psi*)), and conjugate linearity",
            CheckId::M5 => "double involution: lambda** = lambda o J as functionals, fixing exactly the left-invariant measures",
            CheckId::M6 => "anti-homomorphism: (lambda * lambda')* = lambda'* * lambda*",
            CheckId::M7 => "involution via the lift: T_H((lambda_q)*) = lambda*, tv-norm non-increase, norm equality on left-invariant measures, and closure of that subalgebra",
            CheckId::M8 => "subspace characterizations: M(G:H) = lifts of M(G/H), the invariant coset measures are exactly the functionals fixed by J, and T_H maps the invariant subspaces onto each other",
            CheckId::N1 => "normal-subgroup collapse: coset convolution and involution agree with the quotient-group operations, J = id, and every measure is invariant",
            CheckId::G1 => "group-level *-algebra certificate: convolution/involution axioms on L1(G) and M(G), and the embedding f -> sigma_f is an isometric *-homomorphism",
            CheckId::R1 => "finite norm duality: the operator norm of phi -> lambda(phi) over the sup-unit ball equals the total variation norm",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
