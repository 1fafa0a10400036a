#include "vassiliev/json_io.hpp"

#include <limits>
#include <sstream>

namespace vb {

nlohmann::json coeff_to_json(const Int& c) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (c >= lo && c <= hi)
    return nlohmann::json(static_cast<std::int64_t>(c));
  return nlohmann::json(c.str());
}

nlohmann::json h_to_json(const HElem& h) {
  nlohmann::json loops = nlohmann::json::array();
  for (const SurfWord& l : h.loops) loops.push_back(format_surf_word(l));
  return nlohmann::json{{"loops", loops}, {"perm", h.perm}};
}

nlohmann::json chord_to_json(const Chord& c) {
  return nlohmann::json{
      {"i", c.i}, {"j", c.j}, {"gamma", format_surf_word(c.label)}};
}

nlohmann::json u_to_json(const UElem& u, int N) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : u) {
    nlohmann::json chords = nlohmann::json::array();
    for (const Chord& c : key.mono) chords.push_back(chord_to_json(c));
    terms.push_back(nlohmann::json{{"coeff", coeff_to_json(coeff)},
                                   {"chords", chords},
                                   {"h", h_to_json(key.h)}});
  }
  return nlohmann::json{{"N", N}, {"terms", terms}};
}

namespace {

std::string chord_to_text(const Chord& c) {
  std::string s = "t[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
  if (!c.label.empty()) s += "{" + format_surf_word(c.label) + "}";
  return s;
}

std::string h_to_text(const HElem& h) {
  std::string s = "loops=[";
  for (std::size_t i = 0; i < h.loops.size(); ++i) {
    if (i) s += "|";
    s += h.loops[i].empty() ? "1" : format_surf_word(h.loops[i]);
  }
  s += "] perm=[";
  for (std::size_t i = 0; i < h.perm.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(h.perm[i]);
  }
  s += "]";
  return s;
}

}  // namespace

std::string u_to_text(const UElem& u, int N) {
  std::ostringstream out;
  out << "N=" << N << "\n";
  if (u.empty()) {
    out << "0\n";
    return out.str();
  }
  for (const auto& [key, coeff] : u) {
    out << coeff.str() << " ";
    if (key.mono.empty()) {
      out << "1";
    } else {
      for (std::size_t i = 0; i < key.mono.size(); ++i) {
        if (i) out << " ";
        out << chord_to_text(key.mono[i]);
      }
    }
    out << " @ " << h_to_text(key.h) << "\n";
  }
  return out.str();
}

std::string format_kdecomp(const KDecomp& levels) {
  std::ostringstream out;
  for (std::size_t lev = 0; lev < levels.size(); ++lev) {
    out << "level " << lev + 1 << ":";
    for (const FLetter& f : levels[lev]) {
      out << " f[" << f.i << "," << f.j << ",\"" << format_surf_word(f.label)
          << "\"]";
      if (f.e < 0) out << "^-1";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace vb
