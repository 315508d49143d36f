#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "normcat/arrow.hpp"

namespace normcat {

inline std::string render_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

template <class Object>
std::string render_carrier(const Object& o) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < o.size(); ++i) labels.push_back(o.label(i));
  return render_labels(labels);
}

// Element listing of a map, e.g. "{a->x,b->x} : {a,b} -> {x,y}".
template <class Object>
std::string render(const Arrow<Object>& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    if (i) os << ",";
    os << f.dom.label(i) << "->" << f.cod.label(f.map[i]);
  }
  os << "} : " << render_carrier(f.dom) << " -> " << render_carrier(f.cod);
  return os.str();
}

// Image of a map as a subset of its codomain.
template <class Object>
std::string render_subset(const Arrow<Object>& m) {
  std::vector<char> hit(m.cod.size(), 0);
  for (Elem y : m.map) hit[y] = 1;
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < hit.size(); ++y)
    if (hit[y]) labels.push_back(m.cod.label(y));
  return render_labels(labels);
}

template <class Object>
std::string render_subset(const Object& o, const Subset& s) {
  std::vector<std::string> labels;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) labels.push_back(o.label(i));
  return render_labels(labels);
}

}  // namespace normcat
