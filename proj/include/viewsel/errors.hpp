#ifndef VIEWSEL_ERRORS_HPP
#define VIEWSEL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace viewsel {

// Base class for all geometry / planning failures raised by this library.
// std::invalid_argument is used separately for violated preconditions on
// user-supplied parameters (bad alpha, negative extents, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Wedge/cone intersection is empty.
class EmptyIntersection : public Error {
public:
    explicit EmptyIntersection(const std::string& what) : Error(what) {}
};

// The boundary rays do not close the region (parallel or diverging wedges).
class UnboundedIntersection : public Error {
public:
    explicit UnboundedIntersection(const std::string& what) : Error(what) {}
};

// A sine in a denominator vanished: wedges nearly parallel, slice undefined.
class DegenerateConfiguration : public Error {
public:
    explicit DegenerateConfiguration(const std::string& what) : Error(what) {}
};

// Camera pair and target are collinear; the reduction plane is undefined.
class CollinearConfiguration : public Error {
public:
    explicit CollinearConfiguration(const std::string& what) : Error(what) {}
};

// Two rays meet at an angle below the triangulation threshold.
class NearParallelRays : public Error {
public:
    explicit NearParallelRays(const std::string& what) : Error(what) {}
};

// Least-squares triangulation system is rank deficient (all rays parallel).
class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

// A visibility cone was requested for a face no camera can see.
class NoVisibleCameras : public Error {
public:
    NoVisibleCameras(int face_id, const std::string& what)
        : Error(what), face_id(face_id) {}
    int face_id;
};

// Input file could not be parsed; line is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0) : Error(what), line(line) {}
    int line;
};

// Witness for a failed grid-certification bound.
struct BoundWitness {
    double alpha = 0.0;
    double lambda_v = 0.0;
    double lambda_h = 0.0;
    int dims = 2;
    double ratio = 0.0;
    double bound = 0.0;
    double target_x = 0.0;   // worst target position, relative to the cell center
    double target_y = 0.0;
    int cam_i = -1;          // selected pair, flat grid indices
    int cam_j = -1;
};

class BoundViolation : public Error {
public:
    BoundViolation(const std::string& what, BoundWitness witness)
        : Error(what), witness(witness) {}
    BoundWitness witness;
};

// A view-selection pass ended with the coverage target unmet.
class NoProgress : public Error {
public:
    NoProgress(const std::string& what, std::vector<int> uncovered_faces)
        : Error(what), uncovered_faces(std::move(uncovered_faces)) {}
    std::vector<int> uncovered_faces;
};

} // namespace viewsel

#endif
