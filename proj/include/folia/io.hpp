#ifndef FOLIA_IO_HPP
#define FOLIA_IO_HPP

#include "folia/subshift.hpp"

namespace folia {

/// Disk coordinates print as "p/q"; strip coordinates carry a "B:"/"T:"
/// boundary-line tag.
CircleCoord parse_coord(Model m, const std::string& s);
std::string format_coord(Model m, const CircleCoord& c);

Chart load_chart(const std::string& file);

struct PathFile {
    std::string chart_name;
    std::vector<ChordId> leaves;
    std::optional<long> shift;
    std::optional<long> window;
};

PathFile load_path(const std::string& file);

CrossingDiagram load_diagram(const std::string& file);

}  // namespace folia

#endif
