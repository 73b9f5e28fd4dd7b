#include "mub/document_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mub/verification.hpp"

namespace mub {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json provenance_to_json(const Provenance& p) {
  json j = json::object();
  j["method"] = p.method;
  if (p.p) j["p"] = *p.p;
  if (p.theta) j["theta"] = *p.theta;
  if (p.dim_a) j["dA"] = *p.dim_a;
  if (p.dim_b) j["dB"] = *p.dim_b;
  if (p.subsystems) j["subsystems"] = *p.subsystems;
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

Provenance provenance_from_json(const json& j) {
  Provenance p;
  p.method = j.at("method").get<std::string>();
  if (j.contains("p")) p.p = j["p"].get<std::int64_t>();
  if (j.contains("theta")) p.theta = j["theta"].get<std::int64_t>();
  if (j.contains("dA")) p.dim_a = j["dA"].get<int>();
  if (j.contains("dB")) p.dim_b = j["dB"].get<int>();
  if (j.contains("subsystems")) p.subsystems = j["subsystems"].get<int>();
  if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
  return p;
}

}  // namespace

std::string to_json(const MubSet& set) {
  std::int64_t order = 1;
  for (const auto& b : set.bases)
    if (b.exact) order = std::lcm(order, b.exact->reduced().root_order());

  json doc;
  doc["kind"] = "basis_set";
  doc["schema_version"] = kSchemaVersion;
  doc["dim"] = set.dim;
  doc["root_order"] = order;
  doc["provenance"] = provenance_to_json(set.provenance);
  json bases = json::array();
  for (const auto& b : set.bases) {
    json entry = json::object();
    entry["label"] = b.label;
    if (b.exact) {
      ExactBasis e = b.exact->reduced().rescaled(order);
      entry["scale"] =
          e.scale() == ExactBasis::Scale::kUnit ? "unit" : "inv_sqrt_d";
      json grid = json::array();
      for (int r = 0; r < e.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < e.dim(); ++c) {
          if (auto exp = e.at(r, c))
            row.push_back(*exp);
          else
            row.push_back(nullptr);
        }
        grid.push_back(std::move(row));
      }
      entry["exact"] = std::move(grid);
    } else {
      json grid = json::array();
      for (int r = 0; r < b.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < b.dim(); ++c)
          row.push_back({b.matrix(r, c).real(), b.matrix(r, c).imag()});
        grid.push_back(std::move(row));
      }
      entry["float"] = std::move(grid);
    }
    bases.push_back(std::move(entry));
  }
  doc["bases"] = std::move(bases);
  return doc.dump(2) + "\n";
}

MubSet mub_set_from_json(const std::string& text) {
  json doc = json::parse(text);
  if (doc.at("kind") != "basis_set")
    throw std::invalid_argument("not a basis_set document");
  if (doc.at("schema_version") != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version");
  MubSet set;
  set.dim = doc.at("dim").get<int>();
  if (set.dim < 1) throw std::invalid_argument("bad dimension");
  const auto order = doc.at("root_order").get<std::int64_t>();
  set.provenance = provenance_from_json(doc.at("provenance"));
  for (const auto& entry : doc.at("bases")) {
    Basis b;
    b.label = entry.at("label").get<std::string>();
    if (entry.contains("exact") == entry.contains("float"))
      throw std::invalid_argument("basis needs exactly one of exact/float");
    if (entry.contains("exact")) {
      auto scale_tag = entry.at("scale").get<std::string>();
      ExactBasis::Scale scale;
      if (scale_tag == "unit")
        scale = ExactBasis::Scale::kUnit;
      else if (scale_tag == "inv_sqrt_d")
        scale = ExactBasis::Scale::kInvSqrtDim;
      else
        throw std::invalid_argument("unknown scale tag: " + scale_tag);
      const auto& grid = entry.at("exact");
      if (static_cast<int>(grid.size()) != set.dim)
        throw std::invalid_argument("grid rows != dim");
      ExactBasis e(set.dim, order, scale);
      for (int r = 0; r < set.dim; ++r) {
        const auto& row = grid.at(r);
        if (static_cast<int>(row.size()) != set.dim)
          throw std::invalid_argument("grid cols != dim");
        for (int c = 0; c < set.dim; ++c)
          if (!row.at(c).is_null()) e.set(r, c, row.at(c).get<std::int64_t>());
      }
      b.matrix = e.to_matrix();
      b.exact = std::move(e);
    } else {
      const auto& grid = entry.at("float");
      Matrix m(set.dim, set.dim);
      for (int r = 0; r < set.dim; ++r)
        for (int c = 0; c < set.dim; ++c) {
          const auto& z = grid.at(r).at(c);
          m(r, c) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
      b.matrix = std::move(m);
    }
    set.bases.push_back(std::move(b));
  }
  return set;
}

void write_document(const MubSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(set);
}

MubSet read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return mub_set_from_json(buffer.str());
}

namespace {

std::string exact_entry_text(const std::optional<std::int64_t>& e) {
  if (!e) return ".";
  if (*e == 0) return "1";
  return "a^" + std::to_string(*e);
}

}  // namespace

std::string render_text(const MubSet& set) {
  std::ostringstream out;
  out << "dim " << set.dim << ", " << set.bases.size() << " bases ("
      << set.provenance.method << ")\n";
  std::int64_t order = 1;
  for (const auto& b : set.bases)
    if (b.exact) order = std::lcm(order, b.exact->reduced().root_order());
  if (order > 1)
    out << "a = exp(2*pi*i/" << order << ")\n";
  for (const auto& b : set.bases) {
    out << "\n" << b.label;
    if (b.exact) {
      ExactBasis e = b.exact->reduced().rescaled(order);
      if (e.scale() == ExactBasis::Scale::kInvSqrtDim)
        out << "  [entries / sqrt(" << set.dim << ")]";
      out << "\n";
      for (int r = 0; r < set.dim; ++r) {
        for (int c = 0; c < set.dim; ++c)
          out << (c ? " " : "") << exact_entry_text(e.at(r, c));
        out << "\n";
      }
    } else {
      out << "  [floating point]\n";
      for (int r = 0; r < set.dim; ++r) {
        for (int c = 0; c < set.dim; ++c) {
          Complex z = b.matrix(r, c);
          char buf[64];
          std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", z.real(), z.imag());
          out << (c ? " " : "") << buf;
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

std::string render_latex(const MubSet& set) {
  std::ostringstream out;
  out << "\\documentclass{article}\n\\usepackage{amsmath}\n"
      << "\\begin{document}\n";
  std::int64_t order = 1;
  for (const auto& b : set.bases)
    if (b.exact) order = std::lcm(order, b.exact->reduced().root_order());
  if (order > 1)
    out << "Entries use $\\alpha = e^{2\\pi i/" << order << "}$.\n";
  for (const auto& b : set.bases) {
    out << "\\[ \\texttt{" << b.label << "} = ";
    if (b.exact && b.exact->scale() == ExactBasis::Scale::kInvSqrtDim)
      out << "\\frac{1}{\\sqrt{" << set.dim << "}} ";
    out << "\\left(\\begin{array}{" << std::string(set.dim, 'c') << "}\n";
    std::optional<ExactBasis> e;
    if (b.exact) e = b.exact->reduced().rescaled(order);
    for (int r = 0; r < set.dim; ++r) {
      for (int c = 0; c < set.dim; ++c) {
        if (c) out << " & ";
        if (e) {
          const auto& exp = e->at(r, c);
          if (!exp)
            out << "0";
          else if (*exp == 0)
            out << "1";
          else if (*exp == 1)
            out << "\\alpha";
          else
            out << "\\alpha^{" << *exp << "}";
        } else {
          Complex z = b.matrix(r, c);
          char buf[64];
          std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", z.real(), z.imag());
          out << buf;
        }
      }
      out << " \\\\\n";
    }
    out << "\\end{array}\\right) \\]\n";
  }
  out << "\\end{document}\n";
  return out.str();
}

std::string analysis_to_json(const MubSet& set, const Bipartition& split) {
  EntanglementProfile profile = classify_set(set, split);
  DesignReport design = check_2design(set);
  json doc;
  doc["kind"] = "analysis";
  doc["schema_version"] = kSchemaVersion;
  doc["dim"] = set.dim;
  doc["dim_a"] = split.dim_a;
  doc["dim_b"] = split.dim_b;
  doc["complete"] = set.complete();
  json bases = json::array();
  for (const auto& bp : profile.bases) {
    json entry = json::object();
    entry["label"] = bp.label;
    entry["class"] = to_string(bp.verdict);
    entry["purities"] = bp.purities;
    entry["purity_sum"] = bp.purity_sum;
    bases.push_back(std::move(entry));
  }
  doc["bases"] = std::move(bases);
  doc["entanglement_total"] = profile.total;
  doc["conservation_reference"] = conservation_reference(split);
  doc["frame_potential"] = design.frame_potential;
  doc["design_reference"] = design.reference;
  doc["design_pass"] = design.is_design;
  return doc.dump(2) + "\n";
}

}  // namespace mub
