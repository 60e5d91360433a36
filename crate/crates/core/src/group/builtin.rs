use super::FiniteGroup;
use crate::error::{Error, Result};

/// Names accepted by [`builtin_group`], besides `C<n>` for any `n ≥ 1`.
pub const BUILTIN_GROUPS: &[&str] = &["trivial", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"];

pub fn trivial_group() -> FiniteGroup {
    cyclic(1)
}

/// `C_n = ⟨g⟩` with elements `e, g, g2, …`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    FiniteGroup::from_fn(format!("C{n}"), labels, |a, b| (a + b) % n).expect("cyclic table is a group")
}

/// Klein four-group with elements `e, a, b, ab`.
pub fn klein_four() -> FiniteGroup {
    let labels = ["e", "a", "b", "ab"].map(String::from).to_vec();
    FiniteGroup::from_fn("C2xC2", labels, |x, y| x ^ y).expect("Klein table is a group")
}

/// Dihedral group of order `2n` as `r^i s^j`, index `i + n·j`, with `s r s = r⁻¹`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let mut labels = Vec::with_capacity(2 * n);
    for j in 0..2 {
        for i in 0..n {
            let r = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r{i}"),
            };
            let s = if j == 1 { "s" } else { "" };
            let l = format!("{r}{s}");
            labels.push(if l.is_empty() { "e".to_string() } else { l });
        }
    }
    let name = if n == 3 { "S3".to_string() } else { format!("D{n}") };
    FiniteGroup::from_fn(name, labels, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((j + l) % 2)
    })
    .expect("dihedral table is a group")
}

/// Quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroup {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    // unit index u ∈ {0:1, 1:i, 2:j, 3:k}; element index 2u + sign
    let unit_mul = |u: usize, v: usize| -> (usize, bool) {
        match (u, v) {
            (0, w) | (w, 0) => (w, false),
            (a, b) if a == b => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    FiniteGroup::from_fn("Q8", labels, |a, b| {
        let (w, neg) = unit_mul(a / 2, b / 2);
        let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
        2 * w + sign
    })
    .expect("quaternion table is a group")
}

/// `G × H` with labels `(g,h)`, index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let labels = g
        .elements()
        .flat_map(|a| h.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
        .collect();
    FiniteGroup::from_fn(format!("{}x{}", g.name(), h.name()), labels, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })
    .expect("direct product of groups is a group")
}

pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    match name {
        "trivial" | "C1" => Ok(trivial_group()),
        "C2xC2" | "V4" => Ok(klein_four()),
        "S3" => Ok(dihedral(3)),
        "D4" => Ok(dihedral(4)),
        "Q8" => Ok(quaternion()),
        _ => name
            .strip_prefix('C')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| (1..=64).contains(&n))
            .map(cyclic)
            .ok_or_else(|| Error::UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        let expected = [1, 2, 3, 4, 4, 6, 8, 8];
        for (name, order) in BUILTIN_GROUPS.iter().zip(expected) {
            assert_eq!(builtin_group(name).unwrap().order(), order, "{name}");
        }
        assert!(builtin_group("C0").is_err());
        assert!(builtin_group("A5").is_err());
    }

    #[test]
    fn nonabelian_builtins() {
        assert!(!dihedral(3).is_abelian());
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion().is_abelian());
        assert!(klein_four().is_abelian());
        let q = quaternion();
        let i = q.index_of("i").unwrap();
        let j = q.index_of("j").unwrap();
        assert_eq!(q.label(q.mul(i, j)), "k");
        assert_eq!(q.label(q.mul(j, i)), "-k");
        assert_eq!(q.element_order(i), 4);
    }

    #[test]
    fn dihedral_relation() {
        let d = dihedral(4);
        let r = d.index_of("r").unwrap();
        let s = d.index_of("s").unwrap();
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
        assert_eq!(d.label(d.mul(r, s)), "rs");
    }
}
