import mpmath as mp
mp.mp.dps = 40
pts = [mp.mpc(2.5,1.3), mp.mpc(-3.7,0.2), mp.mpc(0.1,50), mp.mpc(500,-300), mp.mpc(1e-3,1e3), mp.mpc(0.5,0), mp.mpc(-0.5, 0), mp.mpc(7.25,-0.75), mp.mpc(1e-6, 1e-6), mp.mpc(-20.5, 3)]
for z in pts:
    v = mp.loggamma(z)
    print("{%r, %r, %s, %s}," % (float(z.real), float(z.imag), mp.nstr(v.real, 20), mp.nstr(v.imag, 20)))
# jacobi phi via hyp2f1: phi = 2F1((rho+i l)/2,(rho-i l)/2; a+1; -sinh^2 r)
def phi(a,b,lam,r):
    rho=a+b+1
    lam=mp.mpc(lam)
    return mp.hyp2f1((rho+1j*lam)/2,(rho-1j*lam)/2,a+1,-mp.sinh(r)**2)
print("phi")
for (a,b) in [(1.0,0.5),(1.5,-0.5),(0.0,-0.5),(2.0,1.0)]:
    for lam in [mp.mpf('0.3'), mp.mpf('3.7'), mp.mpf('40'), mp.mpc('5','0.8'), mp.mpc('0.5','1.2')]:
        for r in [mp.mpf('0.05'), mp.mpf('0.7'), mp.mpf('3'), mp.mpf('9')]:
            if a+b+1 < abs(mp.im(lam)): continue
            v = phi(a,b,lam,r)
            print("{%r, %r, %r, %r, %r, %s, %s}," % (float(a),float(b),float(mp.re(lam)),float(mp.im(lam)),float(r), mp.nstr(mp.re(v),20), mp.nstr(mp.im(v),20)))
