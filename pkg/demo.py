# Orthogonality on the cube and the ball
import openspectral as osp
from openspectral.ortho import PointSet, check_orthogonal
# integer frequencies are orthogonal on the unit square
cube = osp.parse_domain("cube:2")
print(check_orthogonal(cube, PointSet([(0, 0), (1, 0), (0, 1), (5, 7)])).verdict)
# on the disk two frequencies are orthogonal iff their distance is a root radius
ball = osp.UnitBall(2)
r1 = ball.separation_radius()
print(check_orthogonal(ball, PointSet([(0.0, 0.0), (r1, 0.0)])).verdict)
# few root radii, many demanded distances
print(osp.contradiction_table(2, [10, 20, 40, 80, 160]))
