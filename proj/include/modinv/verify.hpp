#pragma once

#include "modinv/report.hpp"

namespace modinv {

/// Runs every identity check for each genus in [lo, hi]. Genus 2 only gets
/// the Euler-number and generating-function checks. Genera are processed
/// in parallel; the returned report is sorted.
VerificationReport run_verification(int lo, int hi);

/// All checks for a single genus (>= 2).
VerificationReport verify_genus(int g);

}  // namespace modinv
