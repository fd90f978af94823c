#include "renner/element_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "renner/error.hpp"

namespace renner {

  namespace {
    std::string strip(std::string_view s) {
      std::string out;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(c);
        }
      }
      return out;
    }

    // Parses "key=[a,b,c]" at the front of s and advances past it.
    std::vector<long> take_list(std::string_view& s, std::string_view key) {
      std::string const prefix = std::string(key) + "=[";
      if (s.substr(0, prefix.size()) != prefix) {
        throw Error(ErrorCode::BadElement, "expected '" + prefix + "...]'");
      }
      s.remove_prefix(prefix.size());
      auto close = s.find(']');
      if (close == std::string_view::npos) {
        throw Error(ErrorCode::BadElement, "unterminated list after " + std::string(key));
      }
      std::string_view body = s.substr(0, close);
      s.remove_prefix(close + 1);
      std::vector<long> out;
      while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        long             x   = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
        if (ec != std::errc() || p != tok.data() + tok.size()) {
          throw Error(ErrorCode::BadElement, "'" + std::string(tok) + "' is not an integer");
        }
        out.push_back(x);
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      }
      return out;
    }
  }  // namespace

  std::string format_element(RennerMonoid const& R, RennerElement a) {
    if (a.is_zero()) {
      return "zero";
    }
    auto const&        verts = R.faces().face(a.face).vertices;
    auto const         map   = R.vertex_map(a);
    std::ostringstream face, img;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      face << (k ? "," : "") << verts[k] + 1;
      img << (k ? "," : "") << map[verts[k]] + 1;
    }
    return "face=[" + face.str() + "];images=[" + img.str() + "]";
  }

  RennerElement parse_element(RennerMonoid const& R, std::string_view text) {
    std::string const s = strip(text);
    if (s == "zero" || s == "0") {
      return R.zero();
    }
    std::string_view rest  = s;
    auto const       face  = take_list(rest, "face");
    if (rest.empty() || rest.front() != ';') {
      throw Error(ErrorCode::BadElement, "expected ';' between face and images");
    }
    rest.remove_prefix(1);
    auto const images = take_list(rest, "images");
    if (!rest.empty()) {
      throw Error(ErrorCode::BadElement, "trailing text '" + std::string(rest) + "'");
    }
    if (face.size() != images.size()) {
      throw Error(ErrorCode::BadElement, "face and images differ in length");
    }
    long const m = static_cast<long>(R.faces().vertices().size());
    std::vector<VertexId> verts;
    for (std::size_t k = 0; k < face.size(); ++k) {
      if (face[k] < 1 || face[k] > m || images[k] < 1 || images[k] > m) {
        throw Error(ErrorCode::BadElement,
                    "vertex labels must lie in 1.." + std::to_string(m));
      }
      verts.push_back(static_cast<VertexId>(face[k] - 1));
    }
    auto const I = R.faces().find(verts);
    if (!I) {
      throw Error(ErrorCode::BadElement, "the domain is not a face of the polytope");
    }
    if (*I == R.faces().empty_face()) {
      return R.zero();
    }
    std::vector<VertexId> targets(images.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
      targets[k] = static_cast<VertexId>(images[k] - 1);
    }
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::BadElement, "images are not injective");
    }
    for (std::size_t w = 0; w < R.group().size(); ++w) {
      bool ok = true;
      for (std::size_t k = 0; k < verts.size() && ok; ++k) {
        ok = R.faces().vertex_image(w, verts[k]) == targets[k];
      }
      if (ok) {
        return R.make_element(*I, w);
      }
    }
    throw Error(ErrorCode::BadElement,
                "no Weyl group element restricts to the given vertex map");
  }

}  // namespace renner
