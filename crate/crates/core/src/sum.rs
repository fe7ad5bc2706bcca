/// Neumaier-compensated accumulator.
///
/// The KL divergence of a near-optimal table is a sum of r tiny signed
/// terms that can sit ten orders of magnitude below the largest term; the
/// cross-algorithm agreement checks compare those sums at 1e-12 relative,
/// which a plain left-to-right f64 sum does not survive.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
