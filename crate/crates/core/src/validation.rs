use std::fmt;

/// Which axiom a [`Violation`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    ParityConsistency,
    SuperAntisymmetry,
    SuperJacobi,
    CobracketParity,
    DualJacobi,
    Cocycle,
    Homogeneity,
    Homomorphism,
    Dimension,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::ParityConsistency => "parity-consistency",
            Rule::SuperAntisymmetry => "super-antisymmetry",
            Rule::SuperJacobi => "super-jacobi",
            Rule::CobracketParity => "cobracket-parity",
            Rule::DualJacobi => "dual-jacobi",
            Rule::Cocycle => "cocycle",
            Rule::Homogeneity => "homogeneity",
            Rule::Homomorphism => "homomorphism",
            Rule::Dimension => "dimension",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// Basis names of the offending pair or triple, e.g. `(E11, E12, E21)`.
    pub at: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.rule, self.at, self.detail)
    }
}

/// Outcome of an axiom check. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, rule: Rule, at: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            rule,
            at: at.into(),
            detail: detail.into(),
        });
    }

    pub fn of_rule(&self, rule: Rule) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.rule == rule)
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}
