#pragma once

#include <iosfwd>
#include <span>

#include "schreier/verify.hpp"

namespace schreier {

/// One summary line per report, then an indented line per failure and skip:
///
///   T1 PASS points=56 failures=0 skipped=0 grid=n=1..14 s=2..5
///     failure n=5 s=3 [closed vs sequence] expected=7 got=8
///     skipped n=14 s=5 [budget_exceeded] A_s: enumeration budget exceeded ...
///
/// A pass with no checked points reads VACUOUS. Wall time is left out so the
/// text stays byte-identical between runs.
void write_reports_text(std::ostream& os, std::span<const VerificationReport> reports);

/// Array of report objects; counts are decimal strings.
void write_reports_json(std::ostream& os, std::span<const VerificationReport> reports);

/// Header "theorem,status,points_checked,failures,skipped,grid" and one row per report.
void write_reports_csv(std::ostream& os, std::span<const VerificationReport> reports);

std::string status_label(const VerificationReport& report);

}  // namespace schreier
