# Bullwhip toolkit
