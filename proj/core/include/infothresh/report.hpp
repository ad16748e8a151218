#pragma once

#include <iosfwd>
#include <string>

#include "infothresh/adequacy.hpp"
#include "infothresh/chain.hpp"
#include "infothresh/curve.hpp"
#include "infothresh/simulate.hpp"
#include "infothresh/threshold.hpp"

namespace infothresh {

// Rendering of curves, tables and reports. Human-readable tables print
// probabilities at 3 decimals; machine-readable exports at 12
// significant digits. All output is deterministic for fixed inputs.

enum class CurveFormat { csv, svg };

struct CurveExport {
  CurveFormat format = CurveFormat::csv;
  ClassifierRates rates;
  double step = 0.01;
  bool annotate_threshold = true;  // SVG only: dashed marker at phi_e
};

// CSV: header "phi,rho", one sample per line, 12 significant digits.
void write_curve_csv(std::ostream& out, const ClassifierRates& rates,
                     double step);

// Self-contained SVG 1.1: axis box, the curve split at phi_e into a
// below-threshold and an above-threshold polyline, and (when annotated)
// a dashed vertical marker carrying class="threshold-marker" and a
// data-phi attribute for scraping.
void write_curve_svg(std::ostream& out, const ClassifierRates& rates,
                     double step, bool annotate_threshold = true);

void write_curve(std::ostream& out, const CurveExport& request);

// Reads a "phi,rho" CSV stream back into curve points. Raises
// ParseError on malformed rows.
std::vector<CurvePoint> read_curve_csv(std::istream& in);

void render_threshold(std::ostream& out, const ClassifierRates& rates);
void render_adequacy(std::ostream& out, const AdequacyReport& report);
void render_simulation(std::ostream& out, const SimulationReport& report);
void render_chain(std::ostream& out, const ChainTrace& trace);

// Recomputes the built-in reference tables (example curves; minimal
// adequate rates) and prints computed next to reference values, putting
// a "<-- differs" flag on any cell whose recomputation disagrees with
// the reference beyond that table's stated precision.
void render_tables(std::ostream& out);

}  // namespace infothresh
