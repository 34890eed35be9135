/// Shortest decimal form of `x` rounded to 12 significant digits.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.11e}", x);
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let rounded: f64 = s.parse().expect("valid float");
    if rounded == 0.0 {
        return "0".into();
    }
    if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, rounded))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn sig_tuple(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| sig(*x)).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::sig;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig(0.5), "0.5");
        assert_eq!(sig(4.0), "4");
        assert_eq!(sig(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig(0.1 + 0.2), "0.3");
        assert_eq!(sig(-2.5e-7), "-2.5e-7");
        assert_eq!(sig(1.0000000000000004), "1");
        assert_eq!(sig(-1e-20), "-1e-20");
        assert_eq!(sig(0.0), "0");
        assert_eq!(sig(123456789012345.0), "123456789012000");
    }
}
