namespace curveplex {}
