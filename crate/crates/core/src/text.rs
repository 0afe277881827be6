//! Shared helpers for canonical text forms.

/// True when `s` has a top-level `+` or binary `-`, i.e. it must be
/// parenthesized before being used as a factor.
pub fn needs_parens(s: &str) -> bool {
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => return true,
            '-' if depth == 0 && i > 0 && !matches!(prev, Some('(' | '*' | '/' | '^')) => {
                return true
            }
            _ => {}
        }
        prev = Some(ch);
    }
    false
}

/// Renders `coeff * monomial`, where an empty `monomial` is the unit.
pub fn coefficient_term(coeff: &str, monomial: &str) -> String {
    if monomial.is_empty() {
        return if needs_parens(coeff) {
            format!("({coeff})")
        } else {
            coeff.to_string()
        };
    }
    match coeff {
        "1" => monomial.to_string(),
        "-1" => format!("-{monomial}"),
        c if needs_parens(c) => format!("({c})*{monomial}"),
        c => format!("{c}*{monomial}"),
    }
}

/// Joins signed terms with ` + ` / ` - `; the empty sum is `0`.
pub fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parens_detection() {
        assert!(needs_parens("h-h^-1"));
        assert!(needs_parens("s^2+1"));
        assert!(needs_parens("-3 - 12*z3"));
        assert!(!needs_parens("-(3/2)*q^-1*h^2"));
        assert!(!needs_parens("(s^2+1)/(s^3)"));
        assert!(!needs_parens("q^-1*z1"));
    }

    #[test]
    fn terms() {
        assert_eq!(coefficient_term("h+h^-1", "z1"), "(h+h^-1)*z1");
        assert_eq!(coefficient_term("-q", "z1*z3"), "-q*z1*z3");
        assert_eq!(coefficient_term("-3 - 12*z3", "y*x"), "(-3 - 12*z3)*y*x");
        assert_eq!(join_terms(vec!["z1".into(), "-q*z2".into()]), "z1 - q*z2");
        assert_eq!(join_terms(Vec::<String>::new()), "0");
    }
}
