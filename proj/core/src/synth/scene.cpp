#include "eipose/synth/scene.hpp"

#include <cmath>

#include "eipose/util/rng.hpp"

namespace eipose {

namespace {

Eigen::Matrix3d skew(const Eigen::Vector3d &t) {
    Eigen::Matrix3d s;
    s << 0, -t.z(), t.y(), t.z(), 0, -t.x(), -t.y(), t.x(), 0;
    return s;
}

Eigen::Vector3d random_unit(Rng &rng) {
    while (true) {
        Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
        const double n = v.norm();
        if (n > 1e-9)
            return v / n;
    }
}

// World-to-camera rotation looking from `center` toward the origin, with the
// principal axis jittered by up to `jitter_deg`.
Eigen::Matrix3d look_at_origin(const Eigen::Vector3d &center, double jitter_deg, Rng &rng) {
    Eigen::Vector3d z = (-center).normalized();
    const double angle = rng.uniform(0.0, jitter_deg * M_PI / 180.0);
    const Eigen::Vector3d axis = random_unit(rng);
    z = Eigen::AngleAxisd(angle, axis) * z;
    Eigen::Vector3d up = std::abs(z.y()) < 0.9 ? Eigen::Vector3d::UnitY() : Eigen::Vector3d::UnitX();
    const Eigen::Vector3d x = up.cross(z).normalized();
    const Eigen::Vector3d y = z.cross(x);
    Eigen::Matrix3d r;
    r.row(0) = x.transpose();
    r.row(1) = y.transpose();
    r.row(2) = z.transpose();
    return r;
}

Eigen::Vector2d project(const Eigen::Matrix3d &r, const Eigen::Vector3d &t, double focal,
                        const Eigen::Vector3d &x, bool *in_front) {
    const Eigen::Vector3d cam = r * x + t;
    *in_front = cam.z() > 1e-6;
    return Eigen::Vector2d(focal * cam.x() / cam.z(), focal * cam.y() / cam.z());
}

Eigen::Matrix3d normalized(const Eigen::Matrix3d &m) { return m / m.norm(); }

} // namespace

Eigen::Matrix3d SceneInstance::fundamental() const {
    // Relative pose mapping camera-2 coordinates into camera 1.
    const Eigen::Matrix3d r12 = rotation1 * rotation2.transpose();
    const Eigen::Vector3d t12 = translation1 - r12 * translation2;
    const Eigen::Matrix3d essential = skew(t12) * r12; // u1^T E u2 = 0
    const Eigen::DiagonalMatrix<double, 3> k1_inv(1.0 / focal_left, 1.0 / focal_left, 1.0);
    const Eigen::DiagonalMatrix<double, 3> k2_inv(1.0 / focal_right, 1.0 / focal_right, 1.0);
    return normalized(k1_inv * essential * k2_inv);
}

Eigen::Matrix<double, 3, 4> SceneInstance::lifted_fundamental() const {
    const Eigen::Matrix3d f = fundamental();
    Eigen::Matrix<double, 3, 4> fhat;
    fhat.leftCols<3>() = f;
    fhat.col(3) = lambda * f.col(2);
    return fhat;
}

Eigen::Matrix3d SceneInstance::homography() const {
    const Eigen::DiagonalMatrix<double, 3> k(focal_right, focal_right, 1.0);
    Eigen::Matrix3d rt;
    rt.col(0) = rotation2.col(0);
    rt.col(1) = rotation2.col(1);
    rt.col(2) = translation2;
    return normalized(k * rt);
}

Eigen::Vector3d undistort(const Eigen::Vector2d &d, double lambda) {
    return Eigen::Vector3d(d.x(), d.y(), 1.0 + lambda * d.squaredNorm());
}

Eigen::Vector2d distort(const Eigen::Vector2d &u, double lambda) {
    const double ru = u.norm();
    if (lambda == 0.0 || ru < 1e-15)
        return u;
    // rd/(1 + lambda*rd^2) = ru, branch continuous at lambda = 0
    const double disc = 1.0 - 4.0 * lambda * ru * ru;
    if (disc < 0)
        throw std::domain_error("no real branch of the division model at this radius");
    const double rd = (1.0 - std::sqrt(disc)) / (2.0 * lambda * ru);
    return u * (rd / ru);
}

SceneSample random_scene(ProblemId id, const SynthConfig &config, uint64_t seed) {
    const ElimProblem &prob = problem(id);
    const int npoints = config.point_count > 0 ? config.point_count : prob.min_correspondences;
    if (npoints < prob.min_correspondences)
        throw std::invalid_argument("point count below the problem minimum");

    Rng rng(Rng::mix(seed, 0xa11ce));
    for (int attempt = 0; attempt < config.max_retries; ++attempt) {
        SceneInstance scene;
        scene.id = id;
        scene.seed = seed;
        scene.lambda = id == ProblemId::EFK ? rng.uniform(config.lambda_min, config.lambda_max) : 0.0;

        const double f = rng.uniform(config.focal_min, config.focal_max);
        scene.focal_right = f;
        scene.focal_left = id == ProblemId::FEF ? f : 1.0;

        const Eigen::Vector3d c1 = random_unit(rng) * rng.uniform(config.camera_radius_min,
                                                                  config.camera_radius_max);
        const Eigen::Vector3d c2 = random_unit(rng) * rng.uniform(config.camera_radius_min,
                                                                  config.camera_radius_max);
        scene.rotation1 = look_at_origin(c1, config.axis_jitter_deg, rng);
        scene.rotation2 = look_at_origin(c2, config.axis_jitter_deg, rng);
        scene.translation1 = -scene.rotation1 * c1;
        scene.translation2 = -scene.rotation2 * c2;

        scene.points.clear();
        for (int i = 0; i < npoints; ++i) {
            Eigen::Vector3d p(rng.uniform(-config.cube_half, config.cube_half),
                              rng.uniform(-config.cube_half, config.cube_half),
                              id == ProblemId::Hf ? 0.0
                                                  : rng.uniform(-config.cube_half, config.cube_half));
            scene.points.push_back(p);
        }

        std::vector<Correspondence> corr;
        bool feasible = true;
        for (const auto &p : scene.points) {
            bool front1 = true, front2 = true;
            Correspondence c;
            if (id == ProblemId::Hf) {
                // left: planar coordinates; right: image point of camera 2
                c.left = p.head<2>();
                c.right = project(scene.rotation2, scene.translation2, scene.focal_right, p, &front2);
            } else {
                c.left = project(scene.rotation1, scene.translation1, scene.focal_left, p, &front1);
                c.right = project(scene.rotation2, scene.translation2, scene.focal_right, p, &front2);
                if (id == ProblemId::EFK && front2) {
                    try {
                        c.right = distort(c.right, scene.lambda);
                    } catch (const std::domain_error &) {
                        front2 = false;
                    }
                }
            }
            if (!front1 || !front2) {
                feasible = false;
                break;
            }
            corr.push_back(c);
        }
        if (feasible)
            return {std::move(scene), std::move(corr)};
    }
    throw SceneGenerationError("no feasible scene found within the retry cap");
}

std::vector<Correspondence> add_noise(const std::vector<Correspondence> &corr, double sigma,
                                      uint64_t seed, bool perturb_left) {
    if (sigma < 0)
        throw std::invalid_argument("noise sigma must be non-negative");
    std::vector<Correspondence> out = corr;
    if (sigma == 0)
        return out;
    Rng rng(Rng::mix(seed, 0x4015e));
    for (auto &c : out) {
        if (perturb_left) {
            c.left.x() += sigma * rng.normal();
            c.left.y() += sigma * rng.normal();
        }
        c.right.x() += sigma * rng.normal();
        c.right.y() += sigma * rng.normal();
    }
    return out;
}

} // namespace eipose
