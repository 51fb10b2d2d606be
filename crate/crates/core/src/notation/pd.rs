use super::NotationError;
use crate::diagram::PlanarDiagram;

pub(super) struct Scanner<'a> {
    bytes: &'a [u8],
    pub(super) pos: usize,
}

impl<'a> Scanner<'a> {
    pub(super) fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(super) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    pub(super) fn err<T>(&self, msg: impl Into<String>) -> Result<T, NotationError> {
        Err(NotationError::Parse { pos: self.pos, msg: msg.into() })
    }

    pub(super) fn expect(&mut self, token: &str) -> Result<(), NotationError> {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected {token:?}"))
        }
    }

    pub(super) fn eat(&mut self, byte: u8) -> bool {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(super) fn integer(&mut self) -> Result<u32, NotationError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an arc label");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        match text.parse() {
            Ok(v) => Ok(v),
            Err(_) => Err(NotationError::Parse { pos: start, msg: format!("arc label {text} out of range") }),
        }
    }

    pub(super) fn signed_integer(&mut self) -> Result<i64, NotationError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        match text.parse() {
            Ok(v) => Ok(v),
            Err(_) => Err(NotationError::Parse { pos: start, msg: "expected an integer".into() }),
        }
    }

    /// A bare name: letters, digits, and underscores.
    pub(super) fn name(&mut self) -> Result<&'a str, NotationError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a knot name");
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    pub(super) fn finished(&mut self) -> Result<(), NotationError> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

/// Parse a `PD[...]` code into a diagram.  `PD[]` is the unknot.
pub fn parse_pd(input: &str) -> Result<PlanarDiagram, NotationError> {
    let mut sc = Scanner::new(input);
    let d = parse_pd_at(&mut sc)?;
    sc.finished()?;
    Ok(d)
}

/// Parse one PD literal starting at the scanner head, leaving trailing input
/// alone (the expression grammar embeds PD codes).
pub(super) fn parse_pd_at(sc: &mut Scanner) -> Result<PlanarDiagram, NotationError> {
    sc.expect("PD")?;
    sc.expect("[")?;
    let mut crossings = Vec::new();
    if !sc.eat(b']') {
        loop {
            sc.expect("X")?;
            sc.expect("(")?;
            let mut quad = [0u32; 4];
            for (i, q) in quad.iter_mut().enumerate() {
                if i > 0 {
                    sc.expect(",")?;
                }
                *q = sc.integer()?;
            }
            sc.expect(")")?;
            crossings.push(quad);
            if sc.eat(b']') {
                break;
            }
            sc.expect(",")?;
        }
    }
    let free_loops = if crossings.is_empty() { 1 } else { 0 };
    Ok(PlanarDiagram::new(crossings, free_loops)?)
}

/// Render a diagram back to a `PD[...]` code.
///
/// Only diagrams expressible in the grammar render: either at least one
/// crossing and no free loops, or the bare unknot (`PD[]`).  Anything else --
/// extra free loops riding alongside crossings, multi-loop unlinks -- has no
/// PD spelling and errors.
pub fn render_pd(d: &PlanarDiagram) -> Result<String, NotationError> {
    let n = d.crossing_count();
    let loops = d.free_loops();
    if n == 0 && loops == 1 {
        return Ok("PD[]".to_owned());
    }
    if loops != 0 {
        return Err(NotationError::Unrenderable(format!(
            "{n} crossings plus {loops} free loop(s)"
        )));
    }
    let entries: Vec<String> = d
        .crossings()
        .iter()
        .map(|c| format!("X({},{},{},{})", c.0[0], c.0[1], c.0[2], c.0[3]))
        .collect();
    Ok(format!("PD[{}]", entries.join(",")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testpd;

    #[test]
    fn parses_the_trefoil() {
        let d = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]").unwrap();
        assert_eq!(d, testpd::trefoil());
    }

    #[test]
    fn whitespace_is_free() {
        let d = parse_pd("  PD[ X( 1 , 4 , 2 , 5 ) ,\n X(3,6,4,1), X(5,2,6,3) ]  ").unwrap();
        assert_eq!(d, testpd::trefoil());
    }

    #[test]
    fn empty_code_is_the_unknot() {
        let d = parse_pd("PD[]").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_pd("PD[X(1,4,2)]") {
            Err(NotationError::Parse { pos, msg }) => {
                assert_eq!(pos, 10, "error should point at the ')'");
                assert!(msg.contains("\",\""), "{msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(parse_pd("PD[X(1,1,2,2)] junk"), Err(NotationError::Parse { .. })));
        assert!(matches!(parse_pd("PD["), Err(NotationError::Parse { .. })));
        // Arc degree problems surface as diagram errors, not parse errors.
        assert!(matches!(
            parse_pd("PD[X(1,2,3,4)]"),
            Err(NotationError::Diagram(_))
        ));
    }

    #[test]
    fn render_round_trips() {
        for d in [testpd::trefoil(), testpd::figure_eight(), testpd::hopf()] {
            let text = render_pd(&d).unwrap();
            assert_eq!(parse_pd(&text).unwrap(), d);
        }
        assert_eq!(render_pd(&PlanarDiagram::unknot()).unwrap(), "PD[]");
    }

    #[test]
    fn unrenderable_diagrams_error() {
        let two_loops = PlanarDiagram::new(vec![], 2).unwrap();
        assert!(matches!(render_pd(&two_loops), Err(NotationError::Unrenderable(_))));
        let kink_plus_loop = PlanarDiagram::new(vec![[1, 1, 2, 2]], 1).unwrap();
        assert!(matches!(render_pd(&kink_plus_loop), Err(NotationError::Unrenderable(_))));
    }
}
