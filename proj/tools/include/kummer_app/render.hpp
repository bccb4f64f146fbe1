#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kummer/hodge.hpp"
#include "kummer/kodaira.hpp"
#include "kummer/monodromy.hpp"
#include "kummer_app/document.hpp"

namespace kummer::app {

std::string smoothness_note(const hodge::CYReport& rep);

void render_report(std::ostream& out, const hodge::CYReport& rep, OutputFormat fmt);

void render_catalog(std::ostream& out, const std::vector<hodge::CYReport>& rows, OutputFormat fmt);

struct FiberRow {
  std::string model;
  kodaira::KodairaFiber fiber;
  int j_order = 0;
  int euler = 0;
};
void render_fibers(std::ostream& out, const std::vector<FiberRow>& rows, OutputFormat fmt);

void render_monodromy(std::ostream& out, const monodromy::PunctureTable& table, const monodromy::TrackOptions& opt,
                      OutputFormat fmt);

}  // namespace kummer::app
