#include "embkit/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace embkit {

SimplicialComplex read_complex_text(std::istream& in) {
    std::vector<std::vector<Vertex>> faces;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        std::istringstream ls(line);
        std::vector<Vertex> face;
        long long v;
        while (ls >> v) {
            if (v < 0)
                throw parse_error("line " + std::to_string(lineno) + ": negative vertex label");
            face.push_back(static_cast<Vertex>(v));
        }
        if (!ls.eof())
            throw parse_error("line " + std::to_string(lineno) + ": expected integer labels");
        if (!face.empty())
            faces.push_back(std::move(face));
    }
    if (faces.empty())
        throw parse_error("no faces in complex file");
    return SimplicialComplex::from_maximal_faces(faces);
}

void write_complex_text(std::ostream& out, const SimplicialComplex& K) {
    for (const auto& f : K.facets()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out << ' ';
            out << vs[i];
        }
        out << '\n';
    }
}

ComplexFile read_complex_json(std::istream& in) {
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw parse_error("structured complex requires a \"facets\" array");
    std::vector<std::vector<Vertex>> faces;
    for (const auto& f : j["facets"]) {
        if (!f.is_array())
            throw parse_error("facet entries must be arrays of labels");
        std::vector<Vertex> face;
        for (const auto& v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw parse_error("facet labels must be nonnegative integers");
            face.push_back(v.get<Vertex>());
        }
        faces.push_back(std::move(face));
    }
    if (faces.empty())
        throw parse_error("empty facets array");
    ComplexFile out;
    out.complex = SimplicialComplex::from_maximal_faces(faces);
    if (j.contains("metadata"))
        out.metadata = j["metadata"];
    return out;
}

void write_complex_json(std::ostream& out, const ComplexFile& file) {
    nlohmann::ordered_json j;
    auto facets = nlohmann::ordered_json::array();
    for (const auto& f : file.complex.facets())
        facets.push_back(f.vertices());
    j["facets"] = std::move(facets);
    if (!file.metadata.is_null())
        j["metadata"] = file.metadata;
    out << j.dump(2) << '\n';
}

ComplexFile load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    // sniff: JSON starts with '{'
    char c = 0;
    while (in.get(c) && (c == ' ' || c == '\t' || c == '\n' || c == '\r')) {}
    in.unget();
    if (c == '{')
        return read_complex_json(in);
    ComplexFile f;
    f.complex = read_complex_text(in);
    return f;
}

void save_complex(const std::string& path, const ComplexFile& file) {
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot open " + path + " for writing");
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (json || !file.metadata.is_null())
        write_complex_json(out, file);
    else
        write_complex_text(out, file.complex);
}

} // namespace embkit
