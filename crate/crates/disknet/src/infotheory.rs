//! Discrete entropy, mutual information, and interaction information over
//! dense joint probability tables.

use crate::{Error, Result};

/// Logarithm base for entropy values: bits or nats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    Two,
    E,
}

impl LogBase {
    fn log(self, p: f64) -> f64 {
        match self {
            // log2 keeps powers of two exact, so coin fixtures come out as
            // whole bits rather than ln(2) multiples.
            LogBase::Two => p.log2(),
            LogBase::E => p.ln(),
        }
    }
}

/// Dense joint distribution over a small set of named discrete variables.
/// Probabilities are stored row-major with the last variable fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    variables: Vec<String>,
    supports: Vec<usize>,
    probs: Vec<f64>,
}

impl JointDistribution {
    pub fn new(
        variables: Vec<String>,
        supports: Vec<usize>,
        probs: Vec<f64>,
    ) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::data("joint needs at least one variable".to_string()));
        }
        if variables.len() != supports.len() {
            return Err(Error::data(format!(
                "{} variables but {} support sizes",
                variables.len(),
                supports.len()
            )));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::data("variable names must be non-empty".to_string()));
            }
            if variables[..i].contains(v) {
                return Err(Error::data(format!("duplicate variable name: {v}")));
            }
        }
        if supports.contains(&0) {
            return Err(Error::data("support sizes must be at least 1".to_string()));
        }
        let cells: usize = supports.iter().product();
        if probs.len() != cells {
            return Err(Error::data(format!(
                "expected {cells} probabilities, got {}",
                probs.len()
            )));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::data(
                "probabilities must be finite and non-negative".to_string(),
            ));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::data(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(JointDistribution {
            variables,
            supports,
            probs,
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn support(&self, variable: &str) -> Result<usize> {
        Ok(self.supports[self.var_index(variable)?])
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    fn var_index(&self, variable: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == variable)
            .ok_or_else(|| Error::data(format!("unknown variable: {variable}")))
    }

    /// Marginal joint over `keep`, in the order given.
    pub fn marginal(&self, keep: &[&str]) -> Result<JointDistribution> {
        if keep.is_empty() {
            return Err(Error::data("marginal over no variables".to_string()));
        }
        let mut axes = Vec::with_capacity(keep.len());
        for (i, name) in keep.iter().enumerate() {
            if keep[..i].contains(name) {
                return Err(Error::data(format!("duplicate variable name: {name}")));
            }
            axes.push(self.var_index(name)?);
        }
        let out_supports: Vec<usize> = axes.iter().map(|&a| self.supports[a]).collect();
        let mut out = vec![0.0f64; out_supports.iter().product()];
        let mut index = vec![0usize; self.supports.len()];
        for (cell, &p) in self.probs.iter().enumerate() {
            decode(cell, &self.supports, &mut index);
            let mut flat = 0;
            for (&axis, &size) in axes.iter().zip(&out_supports) {
                flat = flat * size + index[axis];
            }
            out[flat] += p;
        }
        Ok(JointDistribution {
            variables: keep.iter().map(|s| s.to_string()).collect(),
            supports: out_supports,
            probs: out,
        })
    }

    /// Joint Shannon entropy of the whole table, with 0·log 0 = 0.
    pub fn entropy(&self, base: LogBase) -> f64 {
        self.probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * base.log(p))
            .sum()
    }
}

fn decode(mut cell: usize, supports: &[usize], index: &mut [usize]) {
    for (i, &s) in supports.iter().enumerate().rev() {
        index[i] = cell % s;
        cell /= s;
    }
}

/// I(X;Y) = H(X) + H(Y) − H(X,Y) for a two-variable joint.
pub fn mutual_information(j: &JointDistribution, base: LogBase) -> Result<f64> {
    if j.variables.len() != 2 {
        return Err(Error::data(format!(
            "mutual information needs exactly 2 variables, got {}",
            j.variables.len()
        )));
    }
    let x = j.variables[0].as_str();
    let y = j.variables[1].as_str();
    Ok(j.marginal(&[x])?.entropy(base) + j.marginal(&[y])?.entropy(base) - j.entropy(base))
}

/// H(target | given) = H(target, given) − H(given), marginalizing the rest.
pub fn conditional_entropy(
    j: &JointDistribution,
    target: &str,
    given: &str,
    base: LogBase,
) -> Result<f64> {
    j.var_index(target)?;
    j.var_index(given)?;
    if target == given {
        return Ok(0.0);
    }
    Ok(j.marginal(&[target, given])?.entropy(base) - j.marginal(&[given])?.entropy(base))
}

/// I(X;Y|Z) = H(X,Z) + H(Y,Z) − H(Z) − H(X,Y,Z), marginalizing the rest.
pub fn conditional_mutual_information(
    j: &JointDistribution,
    x: &str,
    y: &str,
    given: &str,
    base: LogBase,
) -> Result<f64> {
    for (a, b) in [(x, y), (x, given), (y, given)] {
        if a == b {
            return Err(Error::data(format!(
                "conditional mutual information variables must be distinct, got {a} twice"
            )));
        }
    }
    let hxz = j.marginal(&[x, given])?.entropy(base);
    let hyz = j.marginal(&[y, given])?.entropy(base);
    let hz = j.marginal(&[given])?.entropy(base);
    let hxyz = j.marginal(&[x, y, given])?.entropy(base);
    Ok(hxz + hyz - hz - hxyz)
}

/// I(X;Y;Z) = I(X;Y) − I(X;Y|Z) for a three-variable joint. Negative values
/// mark synergy (the XOR case), positive values redundancy.
pub fn interaction_information(j: &JointDistribution, base: LogBase) -> Result<f64> {
    if j.variables.len() != 3 {
        return Err(Error::data(format!(
            "interaction information needs exactly 3 variables, got {}",
            j.variables.len()
        )));
    }
    let x = j.variables[0].as_str();
    let y = j.variables[1].as_str();
    let z = j.variables[2].as_str();
    let mi_xy = mutual_information(&j.marginal(&[x, y])?, base)?;
    let cmi = conditional_mutual_information(j, x, y, z, base)?;
    Ok(mi_xy - cmi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::substream;
    use rand::Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn random_joint(label: &str, supports: &[usize]) -> JointDistribution {
        let mut rng = substream(5, label);
        let cells: usize = supports.iter().product();
        let raw: Vec<f64> = (0..cells).map(|_| rng.random::<f64>() + 1e-3).collect();
        let total: f64 = raw.iter().sum();
        let vars: Vec<String> = (0..supports.len())
            .map(|i| format!("V{i}"))
            .collect();
        JointDistribution::new(
            vars,
            supports.to_vec(),
            raw.iter().map(|p| p / total).collect(),
        )
        .unwrap()
    }

    fn xor_joint() -> JointDistribution {
        // X, Y independent fair bits, Z = X xor Y.
        let mut probs = vec![0.0; 8];
        for x in 0..2usize {
            for y in 0..2usize {
                let z = x ^ y;
                probs[(x * 2 + y) * 2 + z] = 0.25;
            }
        }
        JointDistribution::new(names(&["X", "Y", "Z"]), vec![2, 2, 2], probs).unwrap()
    }

    #[test]
    fn entropy_of_simple_marginals() {
        let coin =
            JointDistribution::new(names(&["X"]), vec![2], vec![0.5, 0.5]).unwrap();
        assert_eq!(coin.entropy(LogBase::Two), 1.0);

        let four =
            JointDistribution::new(names(&["X"]), vec![4], vec![0.25; 4]).unwrap();
        assert_eq!(four.entropy(LogBase::Two), 2.0);
        assert!(close(four.entropy(LogBase::E), 4.0f64.ln(), 1e-15));

        let skew =
            JointDistribution::new(names(&["X"]), vec![2], vec![0.25, 0.75]).unwrap();
        let want = -(0.25f64.log2() * 0.25 + 0.75f64.log2() * 0.75);
        assert_eq!(skew.entropy(LogBase::Two), want);
        assert!(close(skew.entropy(LogBase::Two), 0.811278, 1e-6));
    }

    #[test]
    fn zero_probability_cells_contribute_nothing() {
        let d = JointDistribution::new(names(&["X"]), vec![3], vec![0.5, 0.5, 0.0]).unwrap();
        assert_eq!(d.entropy(LogBase::Two), 1.0);
    }

    #[test]
    fn construction_validates_shape_and_mass() {
        let v = names(&["X", "Y"]);
        assert!(JointDistribution::new(v.clone(), vec![2], vec![0.5, 0.5]).is_err());
        assert!(JointDistribution::new(v.clone(), vec![2, 2], vec![0.5, 0.5]).is_err());
        assert!(
            JointDistribution::new(v.clone(), vec![2, 2], vec![0.5, 0.5, 0.25, -0.25]).is_err()
        );
        assert!(
            JointDistribution::new(v.clone(), vec![2, 2], vec![0.3, 0.3, 0.3, 0.3]).is_err()
        );
        assert!(JointDistribution::new(
            names(&["X", "X"]),
            vec![2, 2],
            vec![0.25; 4]
        )
        .is_err());
        assert!(JointDistribution::new(names(&[]), vec![], vec![]).is_err());
        assert!(JointDistribution::new(names(&["X"]), vec![0], vec![]).is_err());
    }

    #[test]
    fn marginals_respect_order_and_mass() {
        let j = random_joint("marginal", &[2, 3]);
        let mx = j.marginal(&["V0"]).unwrap();
        let my = j.marginal(&["V1"]).unwrap();
        assert_eq!(mx.probabilities().len(), 2);
        assert_eq!(my.probabilities().len(), 3);
        assert!(close(mx.probabilities().iter().sum::<f64>(), 1.0, 1e-12));
        assert!(close(my.probabilities().iter().sum::<f64>(), 1.0, 1e-12));

        let swapped = j.marginal(&["V1", "V0"]).unwrap();
        assert_eq!(swapped.variables(), &["V1".to_string(), "V0".to_string()]);
        assert!(close(swapped.entropy(LogBase::E), j.entropy(LogBase::E), 1e-12));

        assert!(j.marginal(&["ghost"]).is_err());
        assert!(j.marginal(&["V0", "V0"]).is_err());
        assert!(j.marginal(&[]).is_err());
    }

    #[test]
    fn independent_coins_share_no_information() {
        let j = JointDistribution::new(names(&["X", "Y"]), vec![2, 2], vec![0.25; 4]).unwrap();
        assert_eq!(mutual_information(&j, LogBase::Two).unwrap(), 0.0);
        let h_xy = conditional_entropy(&j, "X", "Y", LogBase::Two).unwrap();
        assert_eq!(h_xy, 1.0);
    }

    #[test]
    fn copied_coin_shares_everything() {
        let j = JointDistribution::new(
            names(&["X", "Y"]),
            vec![2, 2],
            vec![0.5, 0.0, 0.0, 0.5],
        )
        .unwrap();
        assert_eq!(mutual_information(&j, LogBase::Two).unwrap(), 1.0);
        assert_eq!(conditional_entropy(&j, "X", "Y", LogBase::Two).unwrap(), 0.0);
    }

    #[test]
    fn mutual_information_matches_the_definitional_oracle() {
        let j = random_joint("mi-oracle", &[3, 4]);
        let got = mutual_information(&j, LogBase::E).unwrap();

        let px = j.marginal(&["V0"]).unwrap();
        let py = j.marginal(&["V1"]).unwrap();
        let mut want = 0.0;
        for x in 0..3 {
            for y in 0..4 {
                let p = j.probabilities()[x * 4 + y];
                if p > 0.0 {
                    want +=
                        p * (p / (px.probabilities()[x] * py.probabilities()[y])).ln();
                }
            }
        }
        assert!(close(got, want, 1e-12));
        assert!(got >= -1e-12);
    }

    #[test]
    fn mutual_information_requires_two_variables() {
        let j = random_joint("arity", &[2, 2, 2]);
        assert!(mutual_information(&j, LogBase::Two).is_err());
        assert!(interaction_information(&random_joint("arity2", &[2, 2]), LogBase::Two).is_err());
    }

    #[test]
    fn conditioning_on_itself_leaves_nothing() {
        let j = random_joint("self-cond", &[3, 2]);
        assert_eq!(conditional_entropy(&j, "V0", "V0", LogBase::Two).unwrap(), 0.0);
        assert!(conditional_entropy(&j, "V0", "ghost", LogBase::Two).is_err());
    }

    #[test]
    fn chain_rule_holds_on_random_joints() {
        for (i, supports) in [[2usize, 3], [4, 2], [3, 3]].iter().enumerate() {
            let j = random_joint(&format!("chain-{i}"), supports);
            for base in [LogBase::Two, LogBase::E] {
                let lhs = j.entropy(base);
                let rhs = j.marginal(&["V1"]).unwrap().entropy(base)
                    + conditional_entropy(&j, "V0", "V1", base).unwrap();
                assert!(close(lhs, rhs, 1e-12));
            }
        }
    }

    #[test]
    fn joint_entropy_identity_holds_on_random_joints() {
        for i in 0..20 {
            let j = random_joint(&format!("identity-{i}"), &[3, 4]);
            for base in [LogBase::Two, LogBase::E] {
                let hx = j.marginal(&["V0"]).unwrap().entropy(base);
                let hy = j.marginal(&["V1"]).unwrap().entropy(base);
                let i_xy = mutual_information(&j, base).unwrap();
                assert!(close(j.entropy(base), hx + hy - i_xy, 1e-12));
                assert!(i_xy >= -1e-12);
                assert!(i_xy <= hx.min(hy) + 1e-12);
            }
        }
    }

    #[test]
    fn xor_triple_is_exactly_minus_one_bit() {
        let j = xor_joint();
        assert_eq!(interaction_information(&j, LogBase::Two).unwrap(), -1.0);
        assert_eq!(
            conditional_mutual_information(&j, "X", "Y", "Z", LogBase::Two).unwrap(),
            1.0
        );
        assert_eq!(
            mutual_information(&j.marginal(&["X", "Y"]).unwrap(), LogBase::Two).unwrap(),
            0.0
        );
    }

    #[test]
    fn redundant_triple_is_exactly_plus_one_bit() {
        let mut probs = vec![0.0; 8];
        probs[0] = 0.5;
        probs[7] = 0.5;
        let j = JointDistribution::new(names(&["X", "Y", "Z"]), vec![2, 2, 2], probs).unwrap();
        assert_eq!(interaction_information(&j, LogBase::Two).unwrap(), 1.0);
    }

    #[test]
    fn independent_triple_has_no_interaction() {
        let j =
            JointDistribution::new(names(&["X", "Y", "Z"]), vec![2, 2, 2], vec![0.125; 8])
                .unwrap();
        assert_eq!(interaction_information(&j, LogBase::Two).unwrap(), 0.0);
    }

    #[test]
    fn cmi_rejects_repeated_variables() {
        let j = xor_joint();
        assert!(conditional_mutual_information(&j, "X", "X", "Z", LogBase::Two).is_err());
        assert!(conditional_mutual_information(&j, "X", "Y", "Y", LogBase::Two).is_err());
    }

    #[test]
    fn correlation_dial_moves_information_monotonically() {
        let mut last_mi = -1.0;
        let mut last_joint_h = f64::INFINITY;
        for step in 0..=20 {
            let lambda = step as f64 / 20.0;
            let mut probs = vec![(1.0 - lambda) / 4.0; 4];
            probs[0] += lambda / 2.0;
            probs[3] += lambda / 2.0;
            let j =
                JointDistribution::new(names(&["X", "Y"]), vec![2, 2], probs).unwrap();
            let mi = mutual_information(&j, LogBase::Two).unwrap();
            let h = j.entropy(LogBase::Two);
            assert!(mi >= last_mi - 1e-12, "dip at lambda {lambda}");
            assert!(h <= last_joint_h + 1e-12, "rise at lambda {lambda}");
            last_mi = mi;
            last_joint_h = h;
        }
        assert!(close(last_mi, 1.0, 1e-12));
        assert!(close(last_joint_h, 1.0, 1e-12));
    }
}
